use multibraid::exactalg::binom2;
use multibraid::model::{Multiplicity, TriangleIndex};
use multibraid::obstruction::{hf_local_syz, local_syzygy_structure};
use multibraid::oracle::{hf_ideal, hf_quotient, Oracle, PowerIdeal};
use multibraid::survey::multiplicities;
use proptest::prelude::*;

fn multiplicity(max: u32) -> impl Strategy<Value = Multiplicity> {
    proptest::array::uniform6(1..=max).prop_map(Multiplicity::new)
}

#[test]
fn triangle_generators_vanish_and_match_closed_form() {
    let oracle = Oracle::default();
    let t = TriangleIndex::new(1, 2, 3).unwrap();
    for p in 1..=5 {
        for q in 1..=5 {
            for r in 1..=5 {
                let s = oracle.triangle_syzygies(t, [p, q, r]);
                let expected = local_syzygy_structure(p, q, r).gen_degrees;
                assert_eq!(s.degree_profile(), expected.to_vec(), "({p},{q},{r})");
                let binary = oracle.binary_triangle([p, q, r], (-1, 1));
                let m = Multiplicity::new([1, 1, 1, p, q, r]);
                let ideal = PowerIdeal::triangle(&m, t);
                let mut cumulative = 0;
                for d in 0..=p + q + r {
                    assert_eq!(
                        binary.kernel_dim(d),
                        binary.span_dim(d),
                        "({p},{q},{r}) d={d}"
                    );
                    // Syzygies in x, y, z are the two-variable ones extended by the third variable.
                    cumulative += binary.span_dim(d) as u64;
                    let kernel_3var = [p, q, r]
                        .iter()
                        .map(|&x| binom2(i64::from(d) + 2 - i64::from(x)))
                        .sum::<u64>()
                        - hf_ideal(&ideal, d);
                    assert_eq!(kernel_3var, hf_local_syz(p, q, r, d), "({p},{q},{r}) d={d}");
                    assert_eq!(cumulative, kernel_3var);
                }
            }
        }
    }
}

#[test]
fn modular_certificate_matches_exact_elimination() {
    let oracle = Oracle::default();
    for v in [
        [3, 2, 3, 3, 2, 3],
        [2, 2, 3, 3, 2, 1],
        [1, 2, 3, 4, 3, 2],
        [2, 2, 2, 2, 2, 2],
    ] {
        let m = Multiplicity::new(v);
        for d in 0..=8 {
            assert_eq!(
                oracle.degree_dims(&m, d),
                oracle.degree_dims_exact(&m, d),
                "{m} d={d}"
            );
        }
    }
}

#[test]
fn global_ideal_hf_matches_plain_rank() {
    let oracle = Oracle::default();
    for m in multiplicities(2) {
        for d in 0..=5 {
            assert_eq!(
                oracle.hf_ideal_global(&m, d),
                hf_ideal(&PowerIdeal::global(&m), d)
            );
        }
    }
}

#[test]
fn scan_bound_override() {
    let m: Multiplicity = "3,2,3,3,2,3".parse().unwrap();
    let oracle = Oracle::default();
    let short = oracle.is_locally_generated(&m, Some(3));
    assert!(short.locally_generated);
    assert_eq!(short.max_degree, 3);
    assert_eq!(
        oracle.is_locally_generated(&m, None).gap.map(|g| g.degree),
        Some(4)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_span_lies_in_global_syzygies(m in multiplicity(5), d in 0u32..12) {
        let oracle = Oracle::default();
        let dims = oracle.degree_dims(&m, d);
        prop_assert!(dims.local <= dims.global);
        prop_assert_eq!(dims.global, oracle.hf_syz_global(&m, d));
        prop_assert_eq!(dims.local, oracle.hf_locally_generated(&m, d));
        let expected_lower = m.values().iter().map(|&x| binom2(i64::from(d) + 2 - i64::from(x)) as i64).sum::<i64>()
            - binom2(i64::from(d) + 2) as i64;
        prop_assert!(dims.global as i64 >= expected_lower);
    }

    #[test]
    fn hilbert_functions_are_complementary(m in multiplicity(4), d in 0u32..10) {
        let ideal = PowerIdeal::global(&m);
        prop_assert_eq!(hf_ideal(&ideal, d) + hf_quotient(&ideal, d), binom2(i64::from(d) + 2));
        prop_assert!(hf_ideal(&ideal, d) <= binom2(i64::from(d) + 2));
    }
}
