//! Independent freeness oracle.
//!
//! A multiplicity is free exactly when every global syzygy of
//! `J(0123) = <x^a, y^b, z^c, (x-y)^d, (x-z)^e, (y-z)^f>` on its six listed
//! generators is a combination of syzygies supported on the four triangle
//! sub-ideals. Both sides are finite-dimensional in each degree, so the
//! oracle compares
//!
//! * `V_d`, the kernel of the degree-`d` Macaulay matrix of the six powers, and
//! * `K_d`, the span of all monomial multiples of the local syzygy generators,
//!
//! for `d = 0..=B`. Ranks are first taken modulo two word-size primes. Since
//! `K_d` lies inside `V_d`, `rank_p(K) + rank_p(M) = N_d` certifies both exact
//! ranks at once; only degrees where this fails fall back to exact
//! fraction-free elimination.

mod triangle;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactalg::modular::{rank_mod, PRIMES};
use crate::exactalg::{binom2, expand_power, HomPoly, IntMatrix, LinearForm, MonoBasis};
use crate::model::{
    ClassificationResult, EdgeIndex, FreeWitness, ModelError, Multiplicity, NonFreeCertificate,
    TriangleIndex,
};

pub use triangle::{BinaryForm, BinarySyzygy, BinaryTriangle};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("generator {0} has power 0")]
    ZeroPower(usize),
    #[error("generator {0} is the zero form")]
    ZeroForm(usize),
    #[error("generators {0} and {1} are proportional")]
    Proportional(usize, usize),
}

/// Ideal generated by powers of pairwise non-proportional linear forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerIdeal {
    generators: Vec<(LinearForm, u32)>,
}

impl PowerIdeal {
    pub fn new(generators: Vec<(LinearForm, u32)>) -> Result<Self, OracleError> {
        for (i, (f, p)) in generators.iter().enumerate() {
            if *p == 0 {
                return Err(OracleError::ZeroPower(i));
            }
            if f.is_zero() {
                return Err(OracleError::ZeroForm(i));
            }
            for (j, (g, _)) in generators.iter().enumerate().take(i) {
                if f.is_proportional(g) {
                    return Err(OracleError::Proportional(j, i));
                }
            }
        }
        Ok(PowerIdeal { generators })
    }

    /// `J(0123)`.
    pub fn global(m: &Multiplicity) -> Self {
        PowerIdeal {
            generators: (0..6)
                .map(|p| {
                    let e = EdgeIndex::from_position(p);
                    (e.form(), m.get(e))
                })
                .collect(),
        }
    }

    /// `J(ijk)` on the triangle's three edges in lexicographic order.
    pub fn triangle(m: &Multiplicity, t: TriangleIndex) -> Self {
        PowerIdeal {
            generators: t.edges().iter().map(|&e| (e.form(), m.get(e))).collect(),
        }
    }

    pub fn generators(&self) -> &[(LinearForm, u32)] {
        &self.generators
    }

    /// Degree-`d` Macaulay matrix: one column per multiple `mu * g`.
    pub fn macaulay(&self, d: u32) -> SparseColumns {
        let basis = MonoBasis::new(d);
        let mut cols = Vec::new();
        for &(form, power) in &self.generators {
            if power > d {
                continue;
            }
            let g = HomPoly::new(
                power,
                expand_power(form, power).expect("validated generator"),
            )
            .expect("expansion has basis length");
            let shifts = MonoBasis::new(d - power);
            for mu in shifts.entries() {
                cols.push(
                    g.terms()
                        .map(|(e, c)| (basis.index_of(add(e, mu)), c.clone()))
                        .collect(),
                );
            }
        }
        SparseColumns {
            rows: basis.len(),
            cols,
        }
    }
}

fn add(a: [u32; 3], b: [u32; 3]) -> [u32; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Integer matrix stored column by column.
#[derive(Debug, Clone, Default)]
pub struct SparseColumns {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseColumns {
    /// Rank modulo `p`, a lower bound for the rank over `Q`.
    pub fn rank_mod(&self, p: u64) -> usize {
        let (n, r) = (self.cols.len(), self.rows);
        if n == 0 || r == 0 {
            return 0;
        }
        // Rows of the buffer are the columns of the matrix.
        let mut data = vec![0u64; n * r];
        let pb = BigInt::from(p);
        for (c, col) in self.cols.iter().enumerate() {
            for (row, v) in col {
                let res = match v.to_i64() {
                    Some(x) => x.rem_euclid(p as i64) as u64,
                    None => v.mod_floor(&pb).to_u64().expect("residue below p"),
                };
                data[c * r + row] = res;
            }
        }
        rank_mod(&mut data, n, r, p)
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.cols.len(), self.rows);
        for (c, col) in self.cols.iter().enumerate() {
            for (row, v) in col {
                m.set(c, *row, v.clone());
            }
        }
        m
    }

    /// Exact rank, certified by `rank_mod` when it reaches the trivial bound.
    pub fn rank(&self) -> usize {
        self.rank_with_bound(self.rows.min(self.cols.len()))
    }

    /// Exact rank given a known upper bound.
    pub fn rank_with_bound(&self, upper: usize) -> usize {
        for p in PRIMES {
            if self.rank_mod(p) >= upper {
                return upper;
            }
        }
        self.to_int_matrix().rank()
    }
}

/// Graded dimensions on a contiguous range `0..=max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims(pub Vec<u64>);

impl GradedDims {
    pub fn get(&self, d: u32) -> Option<u64> {
        self.0.get(d as usize).copied()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.0.len().checked_sub(1).map(|d| d as u32)
    }
}

/// One generator of the syzygies of a triangle ideal; `coeffs[s]` multiplies
/// the power of the `s`-th triangle edge and is absent when identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSyzygy {
    pub degree: u32,
    pub coeffs: [Option<HomPoly>; 3],
}

#[derive(Debug, Clone)]
pub struct TriangleSyzygies {
    pub triangle: TriangleIndex,
    pub edges: [EdgeIndex; 3],
    pub powers: [u32; 3],
    pub generators: Vec<LocalSyzygy>,
}

impl TriangleSyzygies {
    pub fn degree_profile(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(|g| g.degree).collect();
        d.sort_unstable();
        d
    }
}

/// Local syzygy generators for all four triangles, in triangle order.
#[derive(Debug, Clone)]
pub struct SyzygyGenerators {
    pub triangles: Vec<Arc<TriangleSyzygies>>,
}

impl SyzygyGenerators {
    pub fn len(&self) -> usize {
        self.triangles.iter().map(|t| t.generators.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// First degree at which global syzygies exceed the local span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyGap {
    pub degree: u32,
    pub dimension: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalGeneration {
    pub locally_generated: bool,
    pub gap: Option<SyzygyGap>,
    /// Last degree compared.
    pub max_degree: u32,
}

/// Exact dimensions of `V_d` and `K_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDims {
    pub degree: u32,
    /// `N_d = sum_e dim S_{d - m_e}`.
    pub ambient: u64,
    pub global: u64,
    pub local: u64,
}

impl DegreeDims {
    pub fn gap(&self) -> u64 {
        self.global - self.local
    }

    /// `hf_ideal(J(0123), d)`.
    pub fn ideal(&self) -> u64 {
        self.ambient - self.global
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Replaces the default bound `B` when set.
    pub max_degree: Option<u32>,
    /// Extra degrees scanned past the bound.
    pub extra_degrees: u32,
}

/// `B = M1 + M2 + 1` for the two largest entries `M1 >= M2`.
pub fn default_degree_bound(m: &Multiplicity) -> u32 {
    let mut v = m.values();
    v.sort_unstable();
    v[5] + v[4] + 1
}

type BinaryKey = ([u32; 3], (i64, i64));
type LocalKey = (TriangleIndex, [u32; 3]);

/// Oracle with memoized triangle computations; safe to share across threads.
#[derive(Debug, Default)]
pub struct Oracle {
    config: OracleConfig,
    binary: Mutex<HashMap<BinaryKey, Arc<BinaryTriangle>>>,
    local: Mutex<HashMap<LocalKey, Arc<TriangleSyzygies>>>,
}

/// Process-wide oracle with the default configuration.
pub fn shared() -> &'static Oracle {
    static ORACLE: OnceLock<Oracle> = OnceLock::new();
    ORACLE.get_or_init(Oracle::default)
}

impl Oracle {
    pub fn new(config: OracleConfig) -> Self {
        Oracle {
            config,
            ..Oracle::default()
        }
    }

    pub fn config(&self) -> OracleConfig {
        self.config
    }

    pub fn degree_bound(&self, m: &Multiplicity) -> u32 {
        self.config
            .max_degree
            .unwrap_or_else(|| default_degree_bound(m))
            + self.config.extra_degrees
    }

    /// Two-variable data for powers of `(l1, l2, l3)` with `l3 = lambda l1 + mu l2`.
    pub fn binary_triangle(&self, powers: [u32; 3], third: (i64, i64)) -> Arc<BinaryTriangle> {
        let key = (powers, third);
        if let Some(t) = self.binary.lock().expect("cache lock").get(&key) {
            return Arc::clone(t);
        }
        let t = Arc::new(BinaryTriangle::compute(powers, third));
        Arc::clone(
            self.binary
                .lock()
                .expect("cache lock")
                .entry(key)
                .or_insert(t),
        )
    }

    /// Syzygy generators of `J(ijk)` for the given powers, lifted to `x, y, z`
    /// and checked by expansion.
    pub fn triangle_syzygies(&self, t: TriangleIndex, powers: [u32; 3]) -> Arc<TriangleSyzygies> {
        let key = (t, powers);
        if let Some(s) = self.local.lock().expect("cache lock").get(&key) {
            return Arc::clone(s);
        }
        let s = Arc::new(self.lift_triangle(t, powers));
        Arc::clone(
            self.local
                .lock()
                .expect("cache lock")
                .entry(key)
                .or_insert(s),
        )
    }

    fn lift_triangle(&self, t: TriangleIndex, powers: [u32; 3]) -> TriangleSyzygies {
        let edges = t.edges();
        let forms = edges.map(|e| e.form());
        let third = plane_coordinates(forms);
        let binary = self.binary_triangle(powers, third);
        let u = HomPoly::linear(forms[0]);
        let v = HomPoly::linear(forms[1]);
        let top = binary
            .generators
            .iter()
            .map(|g| g.degree)
            .max()
            .unwrap_or(0) as usize;
        let u_pows: Vec<HomPoly> = (0..=top).map(|k| u.pow(k as u32)).collect();
        let v_pows: Vec<HomPoly> = (0..=top).map(|k| v.pow(k as u32)).collect();
        let substitute = |f: &BinaryForm| -> HomPoly {
            let deg = f.degree as usize;
            let mut acc = HomPoly::zero(f.degree);
            for (i, c) in f.coeffs.iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    acc.add_assign(&u_pows[deg - i].mul(&v_pows[i]).scale(c));
                }
            }
            acc
        };
        let gens_power: Vec<HomPoly> = (0..3)
            .map(|s| HomPoly::linear(forms[s]).pow(powers[s]))
            .collect();
        let generators = binary
            .generators
            .iter()
            .map(|g| {
                let coeffs = [0, 1, 2].map(|s| g.coeffs[s].as_ref().map(&substitute));
                let mut check = HomPoly::zero(g.degree);
                for s in 0..3 {
                    if let Some(c) = &coeffs[s] {
                        check.add_assign(&c.mul(&gens_power[s]));
                    }
                }
                assert!(check.is_zero(), "lifted local syzygy does not vanish");
                LocalSyzygy {
                    degree: g.degree,
                    coeffs,
                }
            })
            .collect();
        TriangleSyzygies {
            triangle: t,
            edges,
            powers,
            generators,
        }
    }

    pub fn local_syzygy_generators(&self, m: &Multiplicity) -> SyzygyGenerators {
        SyzygyGenerators {
            triangles: TriangleIndex::ALL
                .iter()
                .map(|&t| self.triangle_syzygies(t, m.triangle(t)))
                .collect(),
        }
    }

    /// `HF(S / J(ijk), d)` through the two-variable quotient:
    /// `S/J = (K[u,v]/J') [w]`, so its Hilbert function is a partial sum.
    pub fn hf_quotient_triangle(&self, m: &Multiplicity, t: TriangleIndex, d: u32) -> u64 {
        let third = plane_coordinates(t.edges().map(|e| e.form()));
        let b = self.binary_triangle(m.triangle(t), third);
        b.quotient_hf_extended(d) as u64
    }

    fn global_columns(&self, m: &Multiplicity, d: u32) -> SparseColumns {
        PowerIdeal::global(m).macaulay(d)
    }

    /// Columns spanning `K_d` inside `N_d` coordinates (edge blocks in edge order).
    fn local_columns(&self, m: &Multiplicity, d: u32) -> SparseColumns {
        let (offsets, ambient) = edge_offsets(m, d);
        let gens = self.local_syzygy_generators(m);
        let mut cols = Vec::new();
        for tri in &gens.triangles {
            for g in tri.generators.iter().filter(|g| g.degree <= d) {
                for mu in MonoBasis::new(d - g.degree).entries() {
                    let mut col = Vec::new();
                    for s in 0..3 {
                        let Some(c) = &g.coeffs[s] else { continue };
                        let e = tri.edges[s];
                        let block = MonoBasis::new(d - m.get(e));
                        let off = offsets[e.position()].expect("coefficient degree fits");
                        for (exps, v) in c.terms() {
                            if !num_traits::Zero::is_zero(v) {
                                col.push((off + block.index_of(add(exps, mu)), v.clone()));
                            }
                        }
                    }
                    cols.push(col);
                }
            }
        }
        SparseColumns {
            rows: ambient,
            cols,
        }
    }

    /// Exact `dim V_d` and `dim K_d`.
    pub fn degree_dims(&self, m: &Multiplicity, d: u32) -> DegreeDims {
        let ambient = edge_offsets(m, d).1;
        if ambient == 0 {
            return DegreeDims {
                degree: d,
                ambient: 0,
                global: 0,
                local: 0,
            };
        }
        let global_m = self.global_columns(m, d);
        let local_k = self.local_columns(m, d);
        for p in PRIMES {
            let rm = global_m.rank_mod(p);
            let rk = local_k.rank_mod(p);
            // rank(K) <= dim V = N - rank(M), and both modular ranks are lower bounds.
            if rm + rk == ambient {
                return DegreeDims {
                    degree: d,
                    ambient: ambient as u64,
                    global: (ambient - rm) as u64,
                    local: rk as u64,
                };
            }
        }
        exact_dims(d, ambient, &global_m, &local_k)
    }

    /// [`Oracle::degree_dims`] with both ranks from fraction-free elimination
    /// only; slower, and used to audit the modular certificate.
    pub fn degree_dims_exact(&self, m: &Multiplicity, d: u32) -> DegreeDims {
        let ambient = edge_offsets(m, d).1;
        exact_dims(
            d,
            ambient,
            &self.global_columns(m, d),
            &self.local_columns(m, d),
        )
    }

    /// `HF(J(0123), d)`.
    pub fn hf_ideal_global(&self, m: &Multiplicity, d: u32) -> u64 {
        let cols = self.global_columns(m, d);
        let full = cols.rows.min(cols.cols.len());
        if PRIMES.iter().any(|&p| cols.rank_mod(p) == full) {
            return full as u64;
        }
        self.degree_dims(m, d).ideal()
    }

    pub fn hf_quotient_global(&self, m: &Multiplicity, d: u32) -> u64 {
        binom2(d as i64 + 2) - self.hf_ideal_global(m, d)
    }

    pub fn hf_syz_global(&self, m: &Multiplicity, d: u32) -> u64 {
        edge_offsets(m, d).1 as u64 - self.hf_ideal_global(m, d)
    }

    pub fn hf_locally_generated(&self, m: &Multiplicity, d: u32) -> u64 {
        let cols = self.local_columns(m, d);
        let upper = cols.rows.min(cols.cols.len());
        cols.rank_with_bound(upper) as u64
    }

    /// Graded dimensions of `V` on `0..=max`.
    pub fn syz_global_dims(&self, m: &Multiplicity, max: u32) -> GradedDims {
        GradedDims((0..=max).map(|d| self.degree_dims(m, d).global).collect())
    }

    pub fn is_locally_generated(
        &self,
        m: &Multiplicity,
        max_degree: Option<u32>,
    ) -> LocalGeneration {
        let bound = max_degree.unwrap_or_else(|| self.degree_bound(m));
        for d in 0..=bound {
            let dims = self.degree_dims(m, d);
            if dims.gap() > 0 {
                return LocalGeneration {
                    locally_generated: false,
                    gap: Some(SyzygyGap {
                        degree: d,
                        dimension: dims.gap(),
                    }),
                    max_degree: d,
                };
            }
        }
        LocalGeneration {
            locally_generated: true,
            gap: None,
            max_degree: bound,
        }
    }

    pub fn classify(&self, m: &Multiplicity) -> Result<ClassificationResult, ModelError> {
        let m = m.validated()?;
        let result = self.is_locally_generated(&m, None);
        Ok(match result.gap {
            None => ClassificationResult::Free {
                witness: FreeWitness::Oracle,
                exponents: None,
            },
            Some(gap) => ClassificationResult::NonFree {
                certificate: NonFreeCertificate::OracleGap {
                    degree: gap.degree,
                    dimension_gap: gap.dimension,
                },
            },
        })
    }
}

fn exact_dims(
    d: u32,
    ambient: usize,
    global_m: &SparseColumns,
    local_k: &SparseColumns,
) -> DegreeDims {
    let rm = global_m.to_int_matrix().rank();
    let rk = local_k.to_int_matrix().rank();
    assert!(rm + rk <= ambient, "local span exceeds global syzygies");
    DegreeDims {
        degree: d,
        ambient: ambient as u64,
        global: (ambient - rm) as u64,
        local: rk as u64,
    }
}

/// Start of each edge block in `N_d` coordinates (`None` if `d < m_e`) and `N_d`.
fn edge_offsets(m: &Multiplicity, d: u32) -> ([Option<usize>; 6], usize) {
    let mut offsets = [None; 6];
    let mut total = 0usize;
    for (p, &me) in m.values().iter().enumerate() {
        if me <= d {
            offsets[p] = Some(total);
            total += binom2(d as i64 - me as i64 + 2) as usize;
        }
    }
    (offsets, total)
}

/// `(lambda, mu)` with `l3 = lambda l1 + mu l2`.
fn plane_coordinates(forms: [LinearForm; 3]) -> (i64, i64) {
    let [a, b, c] = forms.map(|f| f.0);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = a[i] * b[j] - a[j] * b[i];
        if det == 0 {
            continue;
        }
        let ln = c[i] * b[j] - c[j] * b[i];
        let mn = a[i] * c[j] - a[j] * c[i];
        assert!(
            ln % det == 0 && mn % det == 0,
            "triangle forms are not unimodular"
        );
        let (lambda, mu) = (ln / det, mn / det);
        assert!(
            (0..3).all(|k| lambda * a[k] + mu * b[k] == c[k]),
            "triangle forms are not coplanar"
        );
        return (lambda, mu);
    }
    panic!("first two triangle forms are proportional")
}

/// `HF(I, d)` as the rank of the degree-`d` Macaulay matrix.
pub fn hf_ideal(ideal: &PowerIdeal, d: u32) -> u64 {
    ideal.macaulay(d).rank() as u64
}

pub fn hf_quotient(ideal: &PowerIdeal, d: u32) -> u64 {
    binom2(d as i64 + 2) - hf_ideal(ideal, d)
}

pub fn hf_syz_global(m: &Multiplicity, d: u32) -> u64 {
    shared().hf_syz_global(m, d)
}

pub fn local_syzygy_generators(m: &Multiplicity) -> SyzygyGenerators {
    shared().local_syzygy_generators(m)
}

pub fn hf_locally_generated(m: &Multiplicity, d: u32) -> u64 {
    shared().hf_locally_generated(m, d)
}

pub fn is_locally_generated(m: &Multiplicity, max_degree: Option<u32>) -> LocalGeneration {
    shared().is_locally_generated(m, max_degree)
}

pub fn oracle_classify(m: &Multiplicity) -> Result<ClassificationResult, ModelError> {
    shared().classify(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Verdict;

    fn m(v: [u32; 6]) -> Multiplicity {
        Multiplicity::new(v)
    }

    #[test]
    fn hf_ideal_examples() {
        assert_eq!(
            hf_ideal(&PowerIdeal::global(&Multiplicity::constant(1)), 1),
            3
        );
        let t012 = TriangleIndex::new(0, 1, 2).unwrap();
        assert_eq!(
            hf_ideal(&PowerIdeal::triangle(&Multiplicity::constant(1), t012), 1),
            2
        );
        assert_eq!(
            hf_ideal(&PowerIdeal::global(&Multiplicity::constant(2)), 2),
            6
        );
    }

    #[test]
    fn hf_quotient_examples() {
        let t012 = TriangleIndex::new(0, 1, 2).unwrap();
        assert_eq!(
            hf_quotient(&PowerIdeal::triangle(&Multiplicity::constant(1), t012), 0),
            1
        );
        // x^2, y^2, (x-y)^2 are independent quadrics.
        assert_eq!(
            hf_quotient(&PowerIdeal::triangle(&Multiplicity::constant(2), t012), 2),
            3
        );
        assert_eq!(
            hf_quotient(&PowerIdeal::global(&Multiplicity::constant(2)), 3),
            0
        );
    }

    #[test]
    fn triangle_quotient_matches_three_variables() {
        let o = Oracle::default();
        for v in [[1, 2, 3, 2, 1, 4], [3, 3, 3, 1, 2, 2], [4, 1, 1, 2, 5, 3]] {
            let mm = m(v);
            for t in TriangleIndex::ALL {
                for d in 0..10 {
                    assert_eq!(
                        o.hf_quotient_triangle(&mm, t, d),
                        hf_quotient(&PowerIdeal::triangle(&mm, t), d),
                        "{mm} {t} {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn power_ideal_validation() {
        assert_eq!(
            PowerIdeal::new(vec![(LinearForm::X, 1), (LinearForm([2, 0, 0]), 2)]),
            Err(OracleError::Proportional(0, 1))
        );
        assert_eq!(
            PowerIdeal::new(vec![(LinearForm::X, 0)]),
            Err(OracleError::ZeroPower(0))
        );
    }

    #[test]
    fn hf_syz_global_examples() {
        assert_eq!(hf_syz_global(&Multiplicity::constant(1), 1), 3);
        assert_eq!(hf_syz_global(&Multiplicity::constant(2), 3), 8);
        assert_eq!(hf_syz_global(&Multiplicity::constant(1), 0), 0);
    }

    #[test]
    fn local_generator_examples() {
        let o = Oracle::default();
        let t = TriangleIndex::new(0, 1, 2).unwrap();
        let s = o.triangle_syzygies(t, [1, 1, 1]);
        assert_eq!(s.degree_profile(), vec![1, 2]);
        assert_eq!(
            o.triangle_syzygies(t, [2, 2, 2]).degree_profile(),
            vec![3, 3]
        );
        assert_eq!(
            o.triangle_syzygies(t, [1, 1, 3]).degree_profile(),
            vec![2, 3]
        );
        let t123 = TriangleIndex::new(1, 2, 3).unwrap();
        assert_eq!(
            o.triangle_syzygies(t123, [2, 3, 2]).degree_profile(),
            vec![3, 4]
        );
    }

    #[test]
    fn locally_generated_dims() {
        assert_eq!(hf_locally_generated(&Multiplicity::constant(2), 3), 8);
        let mm = m([3, 2, 3, 3, 2, 3]);
        assert_eq!(hf_locally_generated(&mm, 4) + 1, hf_syz_global(&mm, 4));
        assert_eq!(hf_locally_generated(&mm, 1), 0);
    }

    #[test]
    fn is_locally_generated_examples() {
        assert_eq!(
            is_locally_generated(&Multiplicity::constant(2), None).gap,
            None
        );
        assert_eq!(
            is_locally_generated(&Multiplicity::constant(1), None).gap,
            None
        );
        let r = is_locally_generated(&m([3, 2, 3, 3, 2, 3]), None);
        assert!(!r.locally_generated);
        assert_eq!(r.gap.unwrap().degree, 4);
    }

    #[test]
    fn oracle_classify_examples() {
        let v = |x| oracle_classify(&m(x)).unwrap().verdict();
        assert_eq!(v([2, 2, 1, 5, 3, 3]), Verdict::Free);
        assert_eq!(v([2, 2, 3, 3, 2, 1]), Verdict::NonFree);
        assert_eq!(v([5, 5, 5, 2, 2, 2]), Verdict::Free);
        assert!(oracle_classify(&m([1, 0, 1, 1, 1, 1])).is_err());
    }

    #[test]
    fn plane_coordinates_of_triangles() {
        let coords: Vec<_> = TriangleIndex::ALL
            .iter()
            .map(|t| plane_coordinates(t.edges().map(|e| e.form())))
            .collect();
        assert_eq!(coords, vec![(1, -1), (1, -1), (1, -1), (-1, 1)]);
    }
}
