//! Closed-form non-freeness obstructions.
//!
//! The Hilbert-function bound `LB(m, d)` underestimates the gap between the
//! global syzygies of `J(0123)` and the span of the four local syzygy modules;
//! any positive value certifies non-freeness. Under the twelve triangle
//! inequalities `LB` is eventually the quadratic `A d^2 + B d + C`, whose
//! discriminant reduces to the statistic `P(m)` and the count `q` of odd
//! triangle sums.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::classifier;
use crate::exactalg::binom2;
use crate::model::{EdgeIndex, Multiplicity, TriangleIndex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructionError {
    #[error("triangle ({0},{1},{2}) violates m_ij <= m_ik + m_jk + 1; use the oracle")]
    OutsideTriangleRange(u32, u32, u32),
    #[error("multiplicity {0} does not satisfy the twelve triangle inequalities")]
    TwelveInequalitiesFail(Multiplicity),
    #[error("multiplicity {0} has a free vertex")]
    HasFreeVertex(Multiplicity),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SyzygyBranch {
    /// Degrees from `(Omega, a)`; covers minimal generation and the boundary.
    Balanced,
    /// One power lies deep inside the ideal of the other two.
    Redundant,
}

/// Degrees of the two minimal first syzygies of a triangle ideal
/// `<l1^mi, l2^mj, l3^mk>` on its three listed generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalSyzygyStructure {
    pub gen_degrees: [u32; 2],
    pub omega: u32,
    pub a: u32,
    pub minimal: bool,
    pub branch: SyzygyBranch,
}

/// `Omega = floor((s - 3) / 2) + 1` and `a = s - 2 Omega` for `s = mi + mj + mk`.
pub fn omega_and_a(mi: u32, mj: u32, mk: u32) -> (u32, u32) {
    let s = mi + mj + mk;
    let omega = (s - 3) / 2 + 1;
    (omega, s - 2 * omega)
}

fn within_triangle_range(mi: u32, mj: u32, mk: u32) -> bool {
    mi <= mj + mk + 1 && mj <= mi + mk + 1 && mk <= mi + mj + 1
}

pub fn local_syzygy_structure(mi: u32, mj: u32, mk: u32) -> LocalSyzygyStructure {
    let (omega, a) = omega_and_a(mi, mj, mk);
    // l^r lies in <l1^p, l2^q> once r >= p + q - 1.
    let minimal = mi + 1 < mj + mk && mj + 1 < mi + mk && mk + 1 < mi + mj;
    if within_triangle_range(mi, mj, mk) {
        let gen_degrees = match a {
            0 => [omega, omega],
            1 => [omega, omega + 1],
            _ => [omega + 1, omega + 1],
        };
        LocalSyzygyStructure {
            gen_degrees,
            omega,
            a,
            minimal,
            branch: SyzygyBranch::Balanced,
        }
    } else {
        let mut v = [mi, mj, mk];
        v.sort_unstable();
        let mut gen_degrees = [v[2], v[0] + v[1]];
        gen_degrees.sort_unstable();
        LocalSyzygyStructure {
            gen_degrees,
            omega,
            a,
            minimal,
            branch: SyzygyBranch::Redundant,
        }
    }
}

/// Degree-`d` dimension of the (free) syzygy module of a triangle ideal in `K[x, y, z]`.
pub fn hf_local_syz(mi: u32, mj: u32, mk: u32, d: u32) -> u64 {
    local_syzygy_structure(mi, mj, mk)
        .gen_degrees
        .iter()
        .map(|&g| binom2(i64::from(d) - i64::from(g) + 2))
        .sum()
}

/// Constant Hilbert polynomial of `S / J(ijk)`, valid inside the triangle range.
pub fn hp_quotient_triangle(mi: u32, mj: u32, mk: u32) -> Result<i64, ObstructionError> {
    if !within_triangle_range(mi, mj, mk) {
        return Err(ObstructionError::OutsideTriangleRange(mi, mj, mk));
    }
    let (omega, _) = omega_and_a(mi, mj, mk);
    let top = i64::from(omega) + 1;
    let sub: u64 = [mi, mj, mk]
        .iter()
        .map(|&m| binom2(top - i64::from(m)))
        .sum();
    Ok(binom2(top) as i64 - sub as i64)
}

fn edge_terms(m: &Multiplicity, d: u32) -> i64 {
    m.values()
        .iter()
        .map(|&x| binom2(i64::from(d) + 2 - i64::from(x)) as i64)
        .sum()
}

/// `LB(m, d) = sum_ij C(d + 2 - m_ij, 2) - C(d + 2, 2) - sum_ijk HF(syz J(ijk), d)`.
pub fn lb(m: &Multiplicity, d: u32) -> i64 {
    let local: u64 = TriangleIndex::ALL
        .iter()
        .map(|&t| {
            let [a, b, c] = m.triangle(t);
            hf_local_syz(a, b, c, d)
        })
        .sum();
    edge_terms(m, d) - binom2(i64::from(d) + 2) as i64 - local as i64
}

/// The same bound written through quotient Hilbert functions:
/// `3 C(d + 2, 2) - sum_ij C(d + 2 - m_ij, 2) - sum_ijk HF(S / J(ijk), d)`.
/// The caller supplies `HF(S / J(ijk), d)`, normally from the oracle.
pub fn lb_from_triangle_quotients<F>(m: &Multiplicity, d: u32, mut hf_quotient: F) -> i64
where
    F: FnMut(TriangleIndex, u32) -> i64,
{
    let quotients: i64 = TriangleIndex::ALL.iter().map(|&t| hf_quotient(t, d)).sum();
    3 * binom2(i64::from(d) + 2) as i64 - edge_terms(m, d) - quotients
}

/// `d_max = (2|m| - 9) / 6`, where the quadratic part of `LB` peaks.
pub fn d_max(m: &Multiplicity) -> Rational64 {
    Rational64::new(2 * i64::from(m.total()) - 9, 6)
}

/// Coefficients `(A, B, C)` of the eventual quadratic `LB~(m, d)`.
pub fn lb_quadratic(
    m: &Multiplicity,
) -> Result<(Rational64, Rational64, Rational64), ObstructionError> {
    let a = Rational64::new(-3, 2);
    let b = Rational64::from_integer(i64::from(m.total())) - Rational64::new(9, 2);
    let mut c = 3i64;
    for &x in m.values().iter() {
        let x = i64::from(x);
        // C(m - 1, 2) as a polynomial in m
        c -= (x - 1) * (x - 2) / 2;
    }
    for t in TriangleIndex::ALL {
        let [p, q, r] = m.triangle(t);
        c -= hp_quotient_triangle(p, q, r)?;
    }
    Ok((a, b, Rational64::from_integer(c)))
}

pub fn lb_quadratic_value(m: &Multiplicity, d: i64) -> Result<Rational64, ObstructionError> {
    let (a, b, c) = lb_quadratic(m)?;
    let d = Rational64::from_integer(d);
    Ok(a * d * d + b * d + c)
}

/// `D^2 = B^2 - 4AC` of the quadratic `LB~`.
pub fn discriminant_sq(m: &Multiplicity) -> Result<Rational64, ObstructionError> {
    let (a, b, c) = lb_quadratic(m)?;
    Ok(b * b - Rational64::from_integer(4) * a * c)
}

/// The closed expansion `9|m| + |m|^2 - 6 sum m_ij^2 + 6 sum HP` that appears in
/// print for `D^2`. It disagrees with `B^2 - 4AC` and is kept only so tests
/// can document the discrepancy; nothing downstream reads it.
pub fn discriminant_sq_printed_expansion(m: &Multiplicity) -> Result<i64, ObstructionError> {
    let total = i64::from(m.total());
    let squares: i64 = m.signed().iter().map(|x| x * x).sum();
    let mut hp = 0;
    for t in TriangleIndex::ALL {
        let [p, q, r] = m.triangle(t);
        hp += hp_quotient_triangle(p, q, r)?;
    }
    Ok(9 * total + total * total - 6 * squares + 6 * hp)
}

/// `P` on arbitrary integer edge values (used for `m_G` as well as `m`).
pub fn p_stat_values(v: &[i64; 6]) -> i64 {
    let [m01, m02, m03, m12, m13, m23] = *v;
    let t1 = m01 + m23 - m02 - m13;
    let t2 = m02 + m13 - m03 - m12;
    let t3 = m03 + m12 - m01 - m23;
    t1 * t1 + t2 * t2 + t3 * t3
}

pub fn p_stat(m: &Multiplicity) -> i64 {
    p_stat_values(&m.signed())
}

/// Number of triangles with odd edge sum, on arbitrary integer edge values.
pub fn odd_triangle_count_values(v: &[i64; 6]) -> u32 {
    TriangleIndex::ALL
        .iter()
        .filter(|t| {
            let s: i64 = t.edges().iter().map(|e| v[e.position()]).sum();
            s.rem_euclid(2) == 1
        })
        .count() as u32
}

pub fn odd_triangle_count(m: &Multiplicity) -> u32 {
    odd_triangle_count_values(&m.signed())
}

/// `m_ij <= m_ik + m_jk + 1` for every triangle and each of its three edges.
pub fn twelve_inequalities(m: &Multiplicity) -> bool {
    TriangleIndex::ALL.iter().all(|&t| {
        let [a, b, c] = m.triangle(t);
        within_triangle_range(a, b, c)
    })
}

/// The first of the six residue/parity cases that fires, numbered `1..=6`.
/// Requires the twelve inequalities and no free vertex.
pub fn general_nonfree_test(m: &Multiplicity) -> Result<Option<u8>, ObstructionError> {
    if !twelve_inequalities(m) {
        return Err(ObstructionError::TwelveInequalitiesFail(*m));
    }
    if classifier::free_vertex(m).is_some() {
        return Err(ObstructionError::HasFreeVertex(*m));
    }
    let divisible = m.total().is_multiple_of(3);
    let q = odd_triangle_count(m);
    let p = p_stat(m);
    let bullet = match (divisible, q) {
        (true, 0) if p > 0 => Some(1),
        (true, 2) if p > 6 => Some(2),
        (true, 4) if p > 12 => Some(3),
        (false, 0) => Some(4),
        (false, 2) if p > 2 => Some(5),
        (false, 4) if p > 8 => Some(6),
        _ => None,
    };
    Ok(bullet)
}

/// First degree in `0..=ceil(d_max) + 2` with `LB(m, d) > 0`.
pub fn first_positive_lb(m: &Multiplicity) -> Option<(u32, i64)> {
    let dm = d_max(m);
    let top = (dm.ceil().to_integer() + 2).max(0) as u32;
    (0..=top).find_map(|d| {
        let v = lb(m, d);
        (v > 0).then_some((d, v))
    })
}

/// Sum of multiplicities over the edges of a triangle.
pub fn triangle_sum(m: &Multiplicity, t: TriangleIndex) -> u32 {
    m.triangle(t).iter().sum()
}

/// Shift `m_ij -> m_ij + 2k + n_i + n_j` (used to check ANN-shift invariance of `P`).
pub fn ann_shift(v: &[i64; 6], k: i64, n: [i64; 4]) -> [i64; 6] {
    let mut out = *v;
    for e in EdgeIndex::ALL {
        let (i, j) = e.vertices();
        out[e.position()] += 2 * k + n[i] + n[j];
    }
    out
}
