//! Closed-form freeness classification.
//!
//! A multiplicity on `A3` is free exactly when it has a free vertex or it is a
//! free ANN multiplicity, i.e. `m_ij = 2k + n_i + n_j + m_G(ij)` for a
//! signed-eliminable graph `G`. Non-free verdicts are annotated with the
//! strongest closed-form obstruction that applies.

use crate::model::{
    AnnDecomposition, ClassificationResult, EdgeIndex, EliminationOrdering, FreeWitness,
    ModelError, Multiplicity, NonFreeCertificate, Sign, SignedGraph4,
};
use crate::obstruction;

/// `deg~_i` for `i = 1, 2, 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TildeDegrees(pub [i64; 3]);

impl TildeDegrees {
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// A free ANN structure together with its exponents `(0, N + deg~_1, N + deg~_2, N + deg~_3)`,
/// sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnFree {
    pub decomposition: AnnDecomposition,
    pub ordering: EliminationOrdering,
    pub exponents: [u32; 4],
}

/// Smallest vertex `i` with `m_jk >= m_ij + m_ik - 1` for all three pairs `{j, k}` avoiding `i`.
pub fn free_vertex(m: &Multiplicity) -> Option<usize> {
    (0..4).find(|&i| is_free_vertex(m, i))
}

pub fn is_free_vertex(m: &Multiplicity, i: usize) -> bool {
    let others: Vec<usize> = (0..4).filter(|&v| v != i).collect();
    let s = |a: usize, b: usize| i64::from(m.between(a, b));
    [(0, 1), (0, 2), (1, 2)].iter().all(|&(x, y)| {
        let (j, k) = (others[x], others[y]);
        s(j, k) >= s(i, j) + s(i, k) - 1
    })
}

/// Every decomposition `m_ij = 2k + n_i + n_j + eps_ij` with `n_i >= 0`,
/// `eps_ij in {-1, 0, 1}`. Scan order: `k` ascending, then sign vectors in
/// lexicographic order with `- < 0 < +`.
pub fn ann_decompositions(m: &Multiplicity) -> Vec<AnnDecomposition> {
    let vals = m.signed();
    let k_max = m.min().div_ceil(2);
    let mut out = Vec::new();
    for k in 0..=k_max {
        for graph in SignedGraph4::all() {
            let eps = graph.values();
            let mut reduced = [0i64; 6];
            for e in 0..6 {
                reduced[e] = vals[e] - 2 * i64::from(k) - eps[e];
            }
            if let Some(n) = solve_vertex_weights(&reduced) {
                out.push(AnnDecomposition { k, n, graph });
            }
        }
    }
    out
}

/// Solves `n_i + n_j = w_ij` on all six edges for nonnegative integers.
fn solve_vertex_weights(w: &[i64; 6]) -> Option<[u32; 4]> {
    let at = |i: usize, j: usize| w[EdgeIndex::new(i, j).unwrap().position()];
    // From triangle 012: n0 = (w01 + w02 - w12) / 2.
    let twice_n0 = at(0, 1) + at(0, 2) - at(1, 2);
    if twice_n0 < 0 || twice_n0 % 2 != 0 {
        return None;
    }
    let n0 = twice_n0 / 2;
    let n = [n0, at(0, 1) - n0, at(0, 2) - n0, at(0, 3) - n0];
    if n.iter().any(|&x| x < 0) {
        return None;
    }
    let consistent = EdgeIndex::ALL.iter().all(|e| {
        let (i, j) = e.vertices();
        n[i] + n[j] == w[e.position()]
    });
    consistent.then(|| n.map(|x| x as u32))
}

/// Checks the two signed-elimination conditions for every triple whose
/// apex `v_k` comes after both other vertices.
pub fn is_elimination_ordering(g: &SignedGraph4, nu: &EliminationOrdering) -> bool {
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                if i == j || i == k || j == k {
                    continue;
                }
                if nu.position(i) >= nu.position(k) || nu.position(j) >= nu.position(k) {
                    continue;
                }
                let ik = g.sign_between(i, k);
                let jk = g.sign_between(j, k);
                let ij = g.sign_between(i, j);
                for sigma in [Sign::Plus, Sign::Minus] {
                    // Two sigma-edges into v_k close with a sigma-edge.
                    if ik == sigma && jk == sigma && ij != sigma {
                        return false;
                    }
                    // v_k -sigma- v_i -(-sigma)- v_j forces some edge v_k v_j.
                    if ik == sigma && ij == sigma.negate() && jk == Sign::Absent {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// First signed-elimination ordering in lexicographic order, if any.
pub fn is_signed_eliminable(g: &SignedGraph4) -> Option<EliminationOrdering> {
    EliminationOrdering::all()
        .into_iter()
        .find(|nu| is_elimination_ordering(g, nu))
}

/// Representatives of the signed graphs on `K4` that admit no signed-elimination
/// ordering, up to relabelling vertices and exchanging the two signs. Single
/// edges carry `+` and double edges `-`.
pub fn non_eliminable_representatives() -> Vec<SignedGraph4> {
    type Edges = &'static [(usize, usize)];
    // (single edges, double edges) with vertices labelled 1..=4.
    const TABLE: [(Edges, Edges); 12] = [
        (&[(1, 4), (3, 2)], &[(3, 4)]),
        (&[(1, 2), (1, 3)], &[(1, 4)]),
        (&[(1, 2), (2, 3), (3, 4), (4, 1)], &[]),
        (&[(4, 1), (1, 2), (2, 3)], &[(3, 4)]),
        (&[(1, 4), (4, 2), (2, 3)], &[(3, 4)]),
        (&[(2, 4), (4, 3)], &[(2, 3), (1, 4)]),
        (&[(1, 4), (3, 2)], &[(1, 2), (3, 4)]),
        (&[(1, 2), (2, 3), (3, 4), (4, 1)], &[(1, 3)]),
        (&[(1, 2), (2, 3), (3, 4)], &[(3, 1), (1, 4)]),
        (&[(4, 1), (1, 3), (3, 2)], &[(1, 2), (3, 4)]),
        (&[(1, 4), (4, 2), (2, 3)], &[(2, 1), (1, 3), (3, 4)]),
        (&[(1, 2), (2, 4), (4, 3), (3, 1)], &[(2, 3), (1, 4)]),
    ];
    let shift = |es: &[(usize, usize)]| -> Vec<(usize, usize)> {
        es.iter().map(|&(i, j)| (i - 1, j - 1)).collect()
    };
    TABLE
        .iter()
        .map(|(single, double)| {
            SignedGraph4::from_edges(&shift(single), &shift(double)).expect("valid table entry")
        })
        .collect()
}

/// `deg~_i`: signed degree of the vertex at position `i` inside the subgraph
/// induced on positions `<= i`.
pub fn tilde_degrees(g: &SignedGraph4, nu: &EliminationOrdering) -> TildeDegrees {
    let mut out = [0i64; 3];
    for (slot, i) in out.iter_mut().zip(1..4) {
        let v = nu.vertex_at(i);
        *slot = (0..4)
            .filter(|&u| u != v && nu.position(u) < i)
            .map(|u| g.sign_between(u, v).value())
            .sum();
    }
    TildeDegrees(out)
}

/// Whether one of the hypotheses `k > 0`, `E- empty`, or `E+ empty` (with
/// positive multiplicities) holds for this decomposition.
pub fn ann_hypothesis_holds(d: &AnnDecomposition, m: &Multiplicity) -> bool {
    d.k > 0
        || d.graph.minus_edges().is_empty()
        || (d.graph.plus_edges().is_empty() && m.values().iter().all(|&x| x > 0))
}

/// Exponents `(0, N + deg~_1, N + deg~_2, N + deg~_3)` sorted ascending.
pub fn ann_exponents(d: &AnnDecomposition, nu: &EliminationOrdering) -> [u32; 4] {
    let big_n = i64::from(d.big_n());
    let td = tilde_degrees(&d.graph, nu);
    let mut e = [0, big_n + td.0[0], big_n + td.0[1], big_n + td.0[2]]
        .map(|x| u32::try_from(x).expect("exponents are nonnegative"));
    e.sort_unstable();
    e
}

/// First decomposition in scan order whose graph is signed-eliminable and
/// which satisfies one of the ANN hypotheses.
pub fn ann_free(m: &Multiplicity) -> Option<AnnFree> {
    ann_decompositions(m)
        .into_iter()
        .filter(|d| ann_hypothesis_holds(d, m))
        .find_map(|d| {
            is_signed_eliminable(&d.graph).map(|nu| AnnFree {
                decomposition: d,
                ordering: nu,
                exponents: ann_exponents(&d, &nu),
            })
        })
}

/// Free/non-free verdict with witness or certificate.
pub fn classify(m: &Multiplicity) -> Result<ClassificationResult, ModelError> {
    let m = m.validated()?;
    if let Some(vertex) = free_vertex(&m) {
        return Ok(ClassificationResult::Free {
            witness: FreeWitness::FreeVertex { vertex },
            exponents: ann_free(&m).map(|a| a.exponents),
        });
    }
    if let Some(a) = ann_free(&m) {
        return Ok(ClassificationResult::Free {
            witness: FreeWitness::AnnFree {
                decomposition: a.decomposition,
                ordering: a.ordering,
            },
            exponents: Some(a.exponents),
        });
    }
    Ok(ClassificationResult::NonFree {
        certificate: nonfree_certificate(&m),
    })
}

/// Strongest closed-form reason for non-freeness, assuming no free vertex.
fn nonfree_certificate(m: &Multiplicity) -> NonFreeCertificate {
    if obstruction::twelve_inequalities(m) {
        if let Ok(Some(bullet)) = obstruction::general_nonfree_test(m) {
            return NonFreeCertificate::GeneralNonFreeCase { bullet };
        }
    }
    if let Some((degree, gap)) = obstruction::first_positive_lb(m) {
        return NonFreeCertificate::LbPositive { degree, gap };
    }
    NonFreeCertificate::NoFreeStructure
}

/// Exponents of a free multiplicity, when an ANN structure supplies them.
pub fn exponents(m: &Multiplicity) -> Result<Option<[u32; 4]>, ModelError> {
    Ok(classify(m)?.exponents())
}

/// Deleted `A3` (edge `23` removed) with multiplicities `(a, b, c, d, e)` on
/// `01, 02, 03, 12, 13`: free iff `c + e <= a + 1` or `b + d <= a + 1`.
pub fn classify_deleted_a3(a: u32, b: u32, c: u32, d: u32, e: u32) -> Result<bool, ModelError> {
    for (pos, v) in [a, b, c, d, e].into_iter().enumerate() {
        if v == 0 {
            return Err(ModelError::ZeroEntry {
                edge: EdgeIndex::from_position(pos),
            });
        }
    }
    Ok(c + e <= a + 1 || b + d <= a + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Verdict;

    fn m(v: [u32; 6]) -> Multiplicity {
        Multiplicity::new(v)
    }

    #[test]
    fn free_vertex_examples() {
        assert_eq!(free_vertex(&m([1, 1, 1, 1, 1, 1])), Some(0));
        assert_eq!(free_vertex(&m([3, 2, 3, 3, 2, 3])), None);
        assert_eq!(free_vertex(&m([2, 2, 1, 5, 3, 3])), Some(0));
    }

    #[test]
    fn decomposition_examples() {
        let has = |mult: [u32; 6], k: u32, n: [u32; 4], g: SignedGraph4| {
            ann_decompositions(&m(mult))
                .iter()
                .any(|d| d.k == k && d.n == n && d.graph == g)
        };
        assert!(has([2; 6], 1, [0; 4], SignedGraph4::EMPTY));
        assert!(has([2; 6], 0, [1; 4], SignedGraph4::EMPTY));
        assert!(has(
            [5, 5, 5, 2, 2, 2],
            0,
            [4, 1, 1, 1],
            SignedGraph4::EMPTY
        ));
        let g = SignedGraph4::from_edges(&[(0, 3), (1, 2)], &[(2, 3)]).unwrap();
        assert!(has([2, 2, 3, 3, 2, 1], 1, [0; 4], g));
        for mult in [
            [2; 6],
            [5, 5, 5, 2, 2, 2],
            [2, 2, 3, 3, 2, 1],
            [1, 4, 2, 3, 3, 1],
        ] {
            for d in ann_decompositions(&m(mult)) {
                assert!(d.reconstructs(&m(mult)), "{d:?}");
            }
        }
    }

    #[test]
    fn eliminable_examples() {
        assert!(is_signed_eliminable(&SignedGraph4::EMPTY).is_some());
        let kp = SignedGraph4::complete(Sign::Plus);
        for nu in EliminationOrdering::all() {
            assert!(is_elimination_ordering(&kp, &nu));
        }
        let c4 = SignedGraph4::from_edges(&[(0, 1), (1, 2), (2, 3), (0, 3)], &[]).unwrap();
        assert!(is_signed_eliminable(&c4).is_none());
    }

    #[test]
    fn tilde_degree_examples() {
        for nu in EliminationOrdering::all() {
            assert_eq!(
                tilde_degrees(&SignedGraph4::EMPTY, &nu),
                TildeDegrees([0, 0, 0])
            );
            assert_eq!(
                tilde_degrees(&SignedGraph4::complete(Sign::Plus), &nu),
                TildeDegrees([1, 2, 3])
            );
            assert_eq!(
                tilde_degrees(&SignedGraph4::complete(Sign::Minus), &nu),
                TildeDegrees([-1, -2, -3])
            );
        }
    }

    #[test]
    fn ann_free_exponents() {
        assert_eq!(ann_free(&m([2; 6])).unwrap().exponents, [0, 4, 4, 4]);
        assert_eq!(ann_free(&m([1; 6])).unwrap().exponents, [0, 1, 2, 3]);
        assert_eq!(
            ann_free(&m([5, 5, 5, 2, 2, 2])).unwrap().exponents,
            [0, 7, 7, 7]
        );
    }

    #[test]
    fn classify_examples() {
        let r = classify(&m([3, 2, 3, 3, 2, 3])).unwrap();
        assert_eq!(
            r,
            ClassificationResult::NonFree {
                certificate: NonFreeCertificate::GeneralNonFreeCase { bullet: 4 }
            }
        );
        let r = classify(&m([2, 2, 1, 5, 3, 3])).unwrap();
        assert!(matches!(
            r,
            ClassificationResult::Free {
                witness: FreeWitness::FreeVertex { vertex: 0 },
                ..
            }
        ));
        let r = classify(&m([2, 2, 3, 3, 2, 1])).unwrap();
        assert_eq!(
            r,
            ClassificationResult::NonFree {
                certificate: NonFreeCertificate::GeneralNonFreeCase { bullet: 5 }
            }
        );
        assert!(classify(&m([0, 1, 1, 1, 1, 1])).is_err());
    }

    #[test]
    fn only_non_eliminable_graphs_decompose_the_p14_example() {
        for d in ann_decompositions(&m([2, 2, 3, 3, 2, 1])) {
            if ann_hypothesis_holds(&d, &m([2, 2, 3, 3, 2, 1])) {
                assert!(is_signed_eliminable(&d.graph).is_none(), "{d:?}");
            }
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponents(&m([1; 6])).unwrap(), Some([0, 1, 2, 3]));
        assert_eq!(exponents(&m([3, 2, 3, 3, 2, 3])).unwrap(), None);
        assert_eq!(exponents(&m([2; 6])).unwrap(), Some([0, 4, 4, 4]));
    }

    #[test]
    fn deleted_a3_examples() {
        assert!(classify_deleted_a3(1, 1, 1, 1, 1).unwrap());
        assert!(!classify_deleted_a3(1, 2, 2, 2, 2).unwrap());
        assert!(classify_deleted_a3(3, 2, 2, 2, 2).unwrap());
        assert!(classify_deleted_a3(0, 2, 2, 2, 2).is_err());
    }

    #[test]
    fn verdict_accessor() {
        assert_eq!(classify(&m([1; 6])).unwrap().verdict(), Verdict::Free);
    }
}
