//! Graded free resolutions of `J(0123)` for free ANN multiplicities.
//!
//! For a free ANN multiplicity the resolution has the shape
//!
//! ```text
//! 0 <- S/J <- S <- (+)_e S(-m_e) <- (+)_triangles S(-d1) (+) S(-d2) <- (+)_{i=1..3} S(-N - deg~_i) <- 0
//! ```
//!
//! where `d1, d2` are the two local syzygy degrees of each triangle.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classifier::{self, tilde_degrees, AnnFree};
use crate::exactalg::binom2;
use crate::model::{EdgeIndex, ModelError, Multiplicity, TriangleIndex};
use crate::obstruction::local_syzygy_structure;
use crate::oracle::{self, Oracle, PowerIdeal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{0} is not free")]
    NotFree(Multiplicity),
    #[error("table unavailable: {0} is free only through a free vertex")]
    TableUnavailable(Multiplicity),
    #[error("witness does not describe {0}")]
    WitnessMismatch(Multiplicity),
}

/// Generator degrees of each homological step after `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub step0: Vec<u32>,
    pub step1: Vec<u32>,
    pub step2: Vec<u32>,
}

impl BettiTable {
    pub fn steps(&self) -> [&[u32]; 3] {
        [&self.step0, &self.step1, &self.step2]
    }

    /// `1 - rank F0 + rank F1 - rank F2`; zero for a resolution of a rank-zero module.
    pub fn rank_alternation(&self) -> i64 {
        1 - self.step0.len() as i64 + self.step1.len() as i64 - self.step2.len() as i64
    }

    /// Alternating sum of the graded dimensions of the complex in degree `d`.
    pub fn euler_characteristic(&self, d: u32) -> i64 {
        let dim = |gs: &[u32]| -> i64 {
            gs.iter()
                .map(|&g| binom2(i64::from(d) - i64::from(g) + 2) as i64)
                .sum()
        };
        binom2(i64::from(d) + 2) as i64 - dim(&self.step0) + dim(&self.step1) - dim(&self.step2)
    }

    /// `F_i = (+) S(-g)^n` strings, e.g. `S(-3)^4 (+) S(-4)^4`.
    pub fn module_strings(&self) -> [String; 3] {
        self.steps().map(|gs| {
            let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
            for &g in gs {
                *counts.entry(g).or_default() += 1;
            }
            counts
                .iter()
                .map(|(g, n)| {
                    if *n == 1 {
                        format!("S(-{g})")
                    } else {
                        format!("S(-{g})^{n}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        })
    }

    /// Betti diagram: entry in row `r`, column `i` counts degree `i + r` in step `i`.
    pub fn betti_diagram(&self) -> String {
        let cols: [Vec<u32>; 4] = [
            vec![0],
            self.step0.clone(),
            self.step1.clone(),
            self.step2.clone(),
        ];
        let rows = cols
            .iter()
            .enumerate()
            .flat_map(|(i, gs)| gs.iter().map(move |&g| g - i as u32))
            .max()
            .unwrap_or(0);
        let cell = |i: usize, r: u32| -> String {
            let n = cols[i].iter().filter(|&&g| g == r + i as u32).count();
            if n == 0 {
                ".".to_string()
            } else {
                n.to_string()
            }
        };
        let mut lines = vec![];
        let width = 4;
        let label_width = format!("{rows}").len().max(6);
        let mut head = format!("{:>label_width$}", "");
        for i in 0..4 {
            head.push_str(&format!("{i:>width$}"));
        }
        lines.push(head);
        let mut total = format!("{:>label_width$}", "total:");
        for c in &cols {
            total.push_str(&format!("{:>width$}", c.len()));
        }
        lines.push(total);
        for r in 0..=rows {
            if (0..4).all(|i| cell(i, r) == ".") {
                continue;
            }
            let mut line = format!("{:>label_width$}", format!("{r}:"));
            for i in 0..4 {
                line.push_str(&format!("{:>width$}", cell(i, r)));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [f0, f1, f2] = self.module_strings();
        write!(f, "0 <- S <- {f0} <- {f1} <- {f2} <- 0")
    }
}

/// Resolution of `J(0123)` from an ANN witness.
pub fn betti_table_free(
    m: &Multiplicity,
    witness: &AnnFree,
) -> Result<BettiTable, ResolutionError> {
    let m = m.validated()?;
    if !witness.decomposition.reconstructs(&m) {
        return Err(ResolutionError::WitnessMismatch(m));
    }
    let step0 = EdgeIndex::ALL.iter().map(|&e| m.get(e)).collect();
    let step1 = TriangleIndex::ALL
        .iter()
        .flat_map(|&t| {
            let [a, b, c] = m.triangle(t);
            local_syzygy_structure(a, b, c).gen_degrees
        })
        .collect();
    let n = i64::from(witness.decomposition.big_n());
    let step2 = tilde_degrees(&witness.decomposition.graph, &witness.ordering)
        .0
        .iter()
        .map(|td| u32::try_from(n + td).expect("top degrees are nonnegative"))
        .collect();
    Ok(BettiTable {
        step0,
        step1,
        step2,
    })
}

/// Finds an ANN witness and builds the table.
pub fn betti_table(m: &Multiplicity) -> Result<BettiTable, ResolutionError> {
    let m = m.validated()?;
    match classifier::ann_free(&m) {
        Some(w) => betti_table_free(&m, &w),
        None if classifier::free_vertex(&m).is_some() => Err(ResolutionError::TableUnavailable(m)),
        None => Err(ResolutionError::NotFree(m)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheck {
    pub passed: bool,
    pub first_failure: Option<u32>,
    pub max_degree: u32,
}

/// Compares the Euler characteristic of the table with `HF(S/J(0123), d)` for `d <= dmax`.
pub fn euler_hf_check(m: &Multiplicity, table: &BettiTable, dmax: u32) -> EulerCheck {
    euler_hf_check_with(oracle::shared(), m, table, dmax)
}

pub fn euler_hf_check_with(
    oracle: &Oracle,
    m: &Multiplicity,
    table: &BettiTable,
    dmax: u32,
) -> EulerCheck {
    let first_failure = (0..=dmax)
        .find(|&d| table.euler_characteristic(d) != oracle.hf_quotient_global(m, d) as i64);
    EulerCheck {
        passed: first_failure.is_none(),
        first_failure,
        max_degree: dmax,
    }
}

/// Whether the power on edge `e` is a minimal generator of `J(0123)`: removing
/// it must lower `HF(J, m_e)`. Lower degrees cannot see the removal, and if
/// the power lies in the other five then every degree is unchanged.
pub fn is_minimal_generator(m: &Multiplicity, e: EdgeIndex) -> bool {
    let full = PowerIdeal::global(m);
    let rest = PowerIdeal::new(
        full.generators()
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != e.position())
            .map(|(_, g)| *g)
            .collect(),
    )
    .expect("subset of valid generators");
    let d = m.get(e);
    oracle::hf_ideal(&rest, d) < oracle::hf_ideal(&full, d)
}

/// True when none of the six powers is redundant, so the resolution is minimal.
pub fn minimality_probe(m: &Multiplicity, table: &BettiTable) -> bool {
    let in_edge_order: Vec<u32> = EdgeIndex::ALL.iter().map(|&e| m.get(e)).collect();
    table.step0 == in_edge_order && EdgeIndex::ALL.iter().all(|&e| is_minimal_generator(m, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<u32>) -> Vec<u32> {
        v.sort_unstable();
        v
    }

    #[test]
    fn constant_two() {
        let t = betti_table(&Multiplicity::constant(2)).unwrap();
        assert_eq!(t.step0, vec![2; 6]);
        assert_eq!(t.step1, vec![3; 8]);
        assert_eq!(t.step2, vec![4; 3]);
        assert_eq!(t.rank_alternation(), 0);
        assert_eq!(
            t.to_string(),
            "0 <- S <- S(-2)^6 <- S(-3)^8 <- S(-4)^3 <- 0"
        );
        assert!(euler_hf_check(&Multiplicity::constant(2), &t, 8).passed);
    }

    #[test]
    fn constant_three() {
        let m = Multiplicity::constant(3);
        let t = betti_table(&m).unwrap();
        assert_eq!(sorted(t.step1.clone()), vec![4, 4, 4, 4, 5, 5, 5, 5]);
        assert_eq!(sorted(t.step2.clone()), vec![5, 6, 7]);
        assert!(euler_hf_check(&m, &t, 10).passed);
    }

    #[test]
    fn corrupted_table_fails() {
        let m = Multiplicity::constant(2);
        let mut t = betti_table(&m).unwrap();
        t.step2[0] += 1;
        let check = euler_hf_check(&m, &t, 8);
        assert!(!check.passed);
        assert_eq!(check.first_failure, Some(4));
    }

    #[test]
    fn n_sum_matches_constant_two() {
        // m_ij = n_i + n_j with n = (1,1,1,1)
        let m = Multiplicity::constant(2);
        assert_eq!(
            betti_table(&m).unwrap(),
            betti_table(&"2,2,2,2,2,2".parse().unwrap()).unwrap()
        );
    }

    #[test]
    fn errors() {
        let m: Multiplicity = "3,2,3,3,2,3".parse().unwrap();
        assert_eq!(betti_table(&m), Err(ResolutionError::NotFree(m)));
        let w = classifier::ann_free(&Multiplicity::constant(2)).unwrap();
        assert_eq!(
            betti_table_free(&Multiplicity::constant(3), &w),
            Err(ResolutionError::WitnessMismatch(Multiplicity::constant(3)))
        );
    }

    #[test]
    fn minimality() {
        let two = Multiplicity::constant(2);
        assert!(minimality_probe(&two, &betti_table(&two).unwrap()));
        // Six linear forms in three variables: each is redundant.
        let one = Multiplicity::constant(1);
        assert!(!minimality_probe(&one, &betti_table(&one).unwrap()));
        // (x - y)^3 lies in <x, y>.
        let m: Multiplicity = "1,3,3,3,3,3".parse().unwrap();
        assert!(!is_minimal_generator(
            &"1,1,3,3,3,3".parse().unwrap(),
            EdgeIndex::new(1, 2).unwrap()
        ));
        assert!(is_minimal_generator(&m, EdgeIndex::new(0, 1).unwrap()));
    }

    #[test]
    fn diagram() {
        let t = betti_table(&Multiplicity::constant(3)).unwrap();
        let d = t.betti_diagram();
        assert!(d.contains("total:   1   6   8   3"), "{d}");
        assert!(d.contains("2:   .   6   4   1"), "{d}");
    }

    #[test]
    fn json_round_trip() {
        let t = betti_table(&Multiplicity::constant(3)).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<BettiTable>(&s).unwrap(), t);
    }
}
