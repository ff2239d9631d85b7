use std::collections::HashSet;

use multibraid::classifier::{
    self, ann_decompositions, ann_free, classify, free_vertex, is_elimination_ordering,
    is_signed_eliminable, non_eliminable_representatives, tilde_degrees,
};
use multibraid::model::{
    ClassificationResult, EliminationOrdering, FreeWitness, Multiplicity, Permutation, SignedGraph4,
};
use multibraid::obstruction::{odd_triangle_count_values, p_stat_values};
use multibraid::survey::multiplicities;
use proptest::prelude::*;

fn multiplicity(max: u32) -> impl Strategy<Value = Multiplicity> {
    proptest::array::uniform6(1..=max).prop_map(Multiplicity::new)
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..24).prop_map(|i| Permutation::all()[i])
}

#[test]
fn non_eliminable_graphs_are_the_orbit_of_the_table() {
    let mut orbit = HashSet::new();
    for g in non_eliminable_representatives() {
        for p in Permutation::all() {
            orbit.insert(g.relabel(&p));
            orbit.insert(g.relabel(&p).swap_signs());
        }
    }
    let rejected: HashSet<SignedGraph4> = SignedGraph4::all()
        .into_iter()
        .filter(|g| is_signed_eliminable(g).is_none())
        .collect();
    assert_eq!(rejected, orbit);
}

#[test]
fn table_representatives_are_pairwise_inequivalent() {
    let reps = non_eliminable_representatives();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            let equivalent = Permutation::all()
                .iter()
                .any(|p| a.relabel(p) == *b || a.relabel(p).swap_signs() == *b);
            assert!(!equivalent, "{a} ~ {b}");
        }
    }
}

#[test]
fn p_and_parity_of_table_graphs() {
    let got: Vec<(u32, i64)> = non_eliminable_representatives()
        .iter()
        .map(|g| {
            (
                odd_triangle_count_values(&g.values()),
                p_stat_values(&g.values()),
            )
        })
        .collect();
    assert_eq!(
        got,
        vec![
            (2, 14),
            (0, 8),
            (0, 8),
            (0, 8),
            (2, 14),
            (2, 18),
            (0, 24),
            (2, 18),
            (2, 14),
            (2, 26),
            (4, 24),
            (4, 32)
        ]
    );
}

#[test]
fn free_vertex_implies_oracle_freeness_small() {
    let o = multibraid::oracle::Oracle::default();
    for m in multiplicities(3).filter(|m| free_vertex(m).is_some()) {
        assert!(o.is_locally_generated(&m, None).locally_generated, "{m}");
    }
}

#[test]
fn exponents_sum_to_total_multiplicity() {
    for m in multiplicities(4) {
        if let Some(e) = classify(&m).unwrap().exponents() {
            assert_eq!(e.iter().sum::<u32>(), m.total(), "{m}");
            assert_eq!(e[0], 0);
        }
    }
}

#[test]
fn ann_witnesses_are_consistent() {
    for m in multiplicities(3) {
        if let Some(w) = ann_free(&m) {
            assert!(w.decomposition.reconstructs(&m));
            assert!(is_elimination_ordering(&w.decomposition.graph, &w.ordering));
            let n = i64::from(w.decomposition.big_n());
            let td = tilde_degrees(&w.decomposition.graph, &w.ordering);
            assert_eq!(3 * n + td.sum(), i64::from(m.total()), "{m}");
        }
        for d in ann_decompositions(&m) {
            assert!(d.reconstructs(&m));
        }
    }
}

#[test]
fn witness_kinds() {
    let r = classify(&Multiplicity::constant(2)).unwrap();
    assert!(matches!(
        r,
        ClassificationResult::Free {
            witness: FreeWitness::AnnFree { .. },
            exponents: Some([0, 4, 4, 4])
        }
    ));
    assert_eq!(
        classifier::exponents(&Multiplicity::constant(1)).unwrap(),
        Some([0, 1, 2, 3])
    );
}

#[test]
fn classification_json_round_trip() {
    for m in multiplicities(2) {
        let r = classify(&m).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<ClassificationResult>(&s).unwrap(), r);
    }
}

proptest! {
    #[test]
    fn relabelling_is_a_group_action(m in multiplicity(9), p in permutation(), q in permutation()) {
        prop_assert_eq!(m.relabel(&q).relabel(&p), m.relabel(&p.compose(&q)));
        prop_assert_eq!(m.relabel(&p).relabel(&p.inverse()), m);
    }

    #[test]
    fn classification_is_symmetric(m in multiplicity(7), p in permutation()) {
        let a = classify(&m).unwrap();
        let b = classify(&m.relabel(&p)).unwrap();
        prop_assert_eq!(a.verdict(), b.verdict());
        if let (Some(x), Some(y)) = (a.exponents(), b.exponents()) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn eliminability_is_invariant(i in 0usize..729, p in permutation()) {
        let g = SignedGraph4::all()[i];
        let e = is_signed_eliminable(&g).is_some();
        prop_assert_eq!(is_signed_eliminable(&g.relabel(&p)).is_some(), e);
        prop_assert_eq!(is_signed_eliminable(&g.swap_signs()).is_some(), e);
    }

    #[test]
    fn orderings_are_bijections(i in 0usize..24) {
        let nu = EliminationOrdering::all()[i];
        for v in 0..4 {
            prop_assert_eq!(nu.vertex_at(nu.position(v)), v);
        }
    }
}
