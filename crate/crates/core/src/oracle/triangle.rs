//! Syzygies of a triangle ideal `<l1^p, l2^q, l3^r>` where `l3 = lambda l1 + mu l2`.
//!
//! The three forms span a plane, so with `u = l1`, `v = l2` the ideal is
//! extended from `K[u, v]` and its syzygy module is the extension of the
//! two-variable one. All linear algebra here is over `K[u, v]`, which keeps
//! the Macaulay matrices at `(j + 1)` rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactalg::{primitive_integer_vector, DenseMatrix};

/// Binary form `sum_i c_i u^{deg - i} v^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    pub degree: u32,
    pub coeffs: Vec<BigInt>,
}

impl BinaryForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![BigInt::zero(); (self.degree + other.degree + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm {
            degree: self.degree + other.degree,
            coeffs,
        }
    }
}

/// A minimal syzygy: coefficient forms on the three generators (absent when
/// the generator's power exceeds the syzygy degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySyzygy {
    pub degree: u32,
    pub coeffs: [Option<BinaryForm>; 3],
}

#[derive(Debug, Clone)]
pub struct BinaryTriangle {
    pub powers: [u32; 3],
    /// `l3 = lambda * u + mu * v`.
    pub third: (i64, i64),
    pub generators: Vec<BinarySyzygy>,
    /// `dim (K[u,v]/J)_j` for `j <= p + q + r`; zero beyond.
    quotient: Vec<usize>,
}

impl BinaryTriangle {
    /// Computes a minimal generating set degree by degree up to `p + q + r`,
    /// which bounds every Koszul syzygy and hence every minimal generator.
    pub fn compute(powers: [u32; 3], third: (i64, i64)) -> Self {
        let mut tri = BinaryTriangle {
            powers,
            third,
            generators: Vec::new(),
            quotient: Vec::new(),
        };
        let top = powers.iter().sum::<u32>();
        tri.quotient = (0..=top)
            .map(|j| (j as usize + 1) - tri.macaulay(j).rank())
            .collect();
        let min_power = *powers.iter().min().unwrap();
        for j in min_power..=top {
            let kernel = tri.macaulay(j).kernel_basis();
            if kernel.is_empty() {
                continue;
            }
            let mut span: Vec<Vec<BigRational>> = tri.multiples(j);
            let mut span_rank = rank_of(&span);
            for w in kernel {
                span.push(w.clone());
                let r = rank_of(&span);
                if r > span_rank {
                    span_rank = r;
                    let syz = tri.vector_to_syzygy(j, &w);
                    tri.generators.push(syz);
                } else {
                    span.pop();
                }
            }
        }
        tri
    }

    pub fn generator_form(&self, t: usize) -> BinaryForm {
        let p = self.powers[t];
        match t {
            0 => monomial(p, 0),
            1 => monomial(p, p),
            _ => {
                let (lambda, mu) = (BigInt::from(self.third.0), BigInt::from(self.third.1));
                let coeffs = (0..=p)
                    .map(|i| binomial(p, i) * pow(&lambda, p - i) * pow(&mu, i))
                    .collect();
                BinaryForm { degree: p, coeffs }
            }
        }
    }

    fn block_sizes(&self, j: u32) -> [usize; 3] {
        self.powers
            .map(|p| if p <= j { (j - p + 1) as usize } else { 0 })
    }

    /// Columns are `u^{j - p_t - b} v^b * gen_t`, grouped by generator.
    pub fn macaulay(&self, j: u32) -> DenseMatrix {
        let sizes = self.block_sizes(j);
        let cols: usize = sizes.iter().sum();
        let mut m = DenseMatrix::zeros((j + 1) as usize, cols);
        let mut col = 0;
        for (t, &size) in sizes.iter().enumerate() {
            let g = self.generator_form(t);
            for b in 0..size {
                for (i, c) in g.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        m.set(i + b, col, BigRational::from_integer(c.clone()));
                    }
                }
                col += 1;
            }
        }
        m
    }

    pub fn kernel_dim(&self, j: u32) -> usize {
        let m = self.macaulay(j);
        m.cols() - m.rank()
    }

    /// `dim_K (K[u,v] / J)_j`; `u^p` and `v^q` alone kill every degree `>= p + q - 1`.
    pub fn quotient_hf(&self, j: u32) -> usize {
        self.quotient.get(j as usize).copied().unwrap_or(0)
    }

    /// `dim_K (K[u,v,w] / J)_d = sum_{j <= d} dim_K (K[u,v] / J)_j`.
    pub fn quotient_hf_extended(&self, d: u32) -> usize {
        self.quotient.iter().take(d as usize + 1).sum()
    }

    /// Degree-`j` multiples of the accepted generators, in kernel coordinates.
    fn multiples(&self, j: u32) -> Vec<Vec<BigRational>> {
        let sizes = self.block_sizes(j);
        let offsets = [0, sizes[0], sizes[0] + sizes[1]];
        let width: usize = sizes.iter().sum();
        let mut out = Vec::new();
        for g in self.generators.iter().filter(|g| g.degree <= j) {
            for shift in 0..=(j - g.degree) as usize {
                let mut v = vec![BigRational::zero(); width];
                for t in 0..3 {
                    if let Some(c) = &g.coeffs[t] {
                        for (i, x) in c.coeffs.iter().enumerate() {
                            v[offsets[t] + i + shift] = BigRational::from_integer(x.clone());
                        }
                    }
                }
                out.push(v);
            }
        }
        out
    }

    /// Dimension of the degree-`j` part of the submodule generated by `generators`.
    pub fn span_dim(&self, j: u32) -> usize {
        rank_of(&self.multiples(j))
    }

    fn vector_to_syzygy(&self, j: u32, w: &[BigRational]) -> BinarySyzygy {
        let ints = primitive_integer_vector(w);
        let sizes = self.block_sizes(j);
        let mut offset = 0;
        let mut coeffs: [Option<BinaryForm>; 3] = [None, None, None];
        for (t, &size) in sizes.iter().enumerate() {
            if size > 0 {
                let c = BinaryForm {
                    degree: j - self.powers[t],
                    coeffs: ints[offset..offset + size].to_vec(),
                };
                if !c.is_zero() {
                    coeffs[t] = Some(c);
                }
            }
            offset += size;
        }
        BinarySyzygy { degree: j, coeffs }
    }

    /// `sum_t c_t * gen_t` for a candidate syzygy; zero for a genuine one.
    pub fn contract(&self, s: &BinarySyzygy) -> BinaryForm {
        let mut acc = BinaryForm {
            degree: s.degree,
            coeffs: vec![BigInt::zero(); s.degree as usize + 1],
        };
        for t in 0..3 {
            if let Some(c) = &s.coeffs[t] {
                let prod = c.mul(&self.generator_form(t));
                for (a, b) in acc.coeffs.iter_mut().zip(prod.coeffs) {
                    *a += b;
                }
            }
        }
        acc
    }

    pub fn degree_profile(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(|g| g.degree).collect();
        d.sort_unstable();
        d
    }
}

fn rank_of(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let data = rows.iter().flatten().cloned().collect();
    DenseMatrix::from_vec(rows.len(), cols, data)
        .expect("uniform rows")
        .rank()
}

fn monomial(degree: u32, v_exp: u32) -> BinaryForm {
    let mut coeffs = vec![BigInt::zero(); degree as usize + 1];
    coeffs[v_exp as usize] = BigInt::one();
    BinaryForm { degree, coeffs }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn pow(b: &BigInt, e: u32) -> BigInt {
    num_traits::pow(b.clone(), e as usize)
}
