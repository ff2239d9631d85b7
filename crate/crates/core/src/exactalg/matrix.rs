use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::modular;
use super::{primitive_integer_vector, ExactAlgError, ExactScalar};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, ExactAlgError> {
        if data.len() != rows * cols {
            return Err(ExactAlgError::Shape {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| BigInt::from(x))
            })
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Exact rank over `Q` by fraction-free elimination. Every intermediate
    /// entry is a minor of the input, so growth stays polynomial.
    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side; rank is transpose invariant.
        if self.cols < self.rows {
            return self.transpose().rank();
        }
        let cols = self.cols;
        let mut a: Vec<Vec<BigInt>> = self.data.chunks(cols.max(1)).map(<[_]>::to_vec).collect();
        a.retain(|row| row.iter().any(|x| !x.is_zero()));
        let rows = a.len();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            // Smallest nonzero pivot keeps the products short.
            let Some(piv) = (rank..rows)
                .filter(|&r| !a[r][c].is_zero())
                .min_by_key(|&r| a[r][c].bits())
            else {
                continue;
            };
            a.swap(piv, rank);
            let (head, tail) = a.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let pivot = &pivot_row[c];
            for row in tail.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    let mut t = pivot * &row[j];
                    if !lead.is_zero() && !pivot_row[j].is_zero() {
                        t -= &lead * &pivot_row[j];
                    }
                    row[j] = if prev.is_one() { t } else { t.div_floor(&prev) };
                }
            }
            prev = a[rank][c].clone();
            rank += 1;
        }
        rank
    }

    /// Rank over `Z/pZ`; a lower bound for [`IntMatrix::rank`].
    pub fn rank_mod(&self, p: u64) -> usize {
        let pb = BigInt::from(p);
        let mut data: Vec<u64> = self
            .data
            .iter()
            .map(|x| {
                let r = x.mod_floor(&pb);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect();
        modular::rank_mod(&mut data, self.rows, self.cols, p)
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_vec(
        rows: usize,
        cols: usize,
        entries: Vec<ExactScalar>,
    ) -> Result<Self, ExactAlgError> {
        if entries.len() != rows * cols {
            return Err(ExactAlgError::Shape {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
            })
            .collect();
        DenseMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExactScalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-wise denominator clearing; preserves rank.
    pub fn to_integer_rows(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.entries.len());
        for r in 0..self.rows {
            data.extend(primitive_integer_vector(self.row(r)));
        }
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        self.to_integer_rows().rank()
    }

    /// Basis of the right null space `{v : M v = 0}`, read off the reduced
    /// row echelon form: one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<ExactScalar>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (DenseMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(piv) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..a.cols {
                    a.entries.swap(piv * a.cols + j, r * a.cols + j);
                }
            }
            let inv = a.get(r, c).recip();
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(DenseMatrix::identity(3).rank(), 3);
        assert!(DenseMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(DenseMatrix::zeros(2, 5).rank(), 0);
        assert_eq!(DenseMatrix::zeros(2, 5).kernel_basis().len(), 5);
    }

    #[test]
    fn one_by_two_kernel() {
        let m = DenseMatrix::from_int_rows(&[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(
            primitive_integer_vector(&k[0]),
            vec![BigInt::from(1), BigInt::from(-1)]
        );
    }

    #[test]
    fn rectangular_bareiss_with_skipped_columns() {
        let m = IntMatrix::from_rows(&[
            vec![0, 2, 4, 1],
            vec![0, 1, 2, 0],
            vec![0, 3, 6, 1],
            vec![5, 0, 0, 0],
        ]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.transpose().rank(), 3);
        assert_eq!(m.rank_mod(modular::PRIMES[0]), 3);
    }

    #[test]
    fn rational_entries() {
        let m = DenseMatrix::from_vec(
            2,
            2,
            vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::new(1.into(), 3.into()),
                q(3),
                q(2),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }
}
