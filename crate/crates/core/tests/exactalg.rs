use multibraid::exactalg::{
    binom2, expand_power, DenseMatrix, HomPoly, IntMatrix, LinearForm, MonoBasis,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
    })
}

/// Low-rank products exercise the rank-deficient paths.
fn product_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..4, 1usize..6).prop_flat_map(|(r, k, c)| {
        (
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, k), r),
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), k),
        )
            .prop_map(move |(a, b)| {
                (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                            .collect()
                    })
                    .collect()
            })
    })
}

proptest! {
    #[test]
    fn bareiss_matches_rational_rank(rows in small_matrix()) {
        let exact = DenseMatrix::from_int_rows(&rows).rank();
        prop_assert_eq!(IntMatrix::from_rows(&rows).rank(), exact);
        prop_assert_eq!(IntMatrix::from_rows(&rows).transpose().rank(), exact);
    }

    #[test]
    fn low_rank_products(rows in product_matrix()) {
        let exact = DenseMatrix::from_int_rows(&rows).rank();
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(m.rank(), exact);
        prop_assert!(m.rank_mod(2_147_483_629) <= exact);
    }

    #[test]
    fn kernel_is_annihilated_and_complementary(rows in small_matrix()) {
        let m = DenseMatrix::from_int_rows(&rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        if !kernel.is_empty() {
            let flat = kernel.iter().flatten().cloned().collect();
            let k = DenseMatrix::from_vec(kernel.len(), m.cols(), flat).unwrap();
            prop_assert_eq!(k.rank(), kernel.len());
        }
    }

    #[test]
    fn rref_pivots_are_unit_columns(rows in small_matrix()) {
        let (r, pivots) = DenseMatrix::from_int_rows(&rows).rref();
        for (i, &c) in pivots.iter().enumerate() {
            for row in 0..r.rows() {
                let want = if row == i { 1 } else { 0 };
                prop_assert_eq!(r.get(row, c).clone(), num_rational::BigRational::from_integer(want.into()));
            }
        }
    }

    #[test]
    fn monomial_index_round_trip(d in 0u32..15) {
        let b = MonoBasis::new(d);
        prop_assert_eq!(b.len() as u64, binom2(i64::from(d) + 2));
        for (i, e) in b.entries().into_iter().enumerate() {
            prop_assert_eq!(e.iter().sum::<u32>(), d);
            prop_assert_eq!(b.index_of(e), i);
            prop_assert_eq!(b.exponents(i), e);
        }
    }

    #[test]
    fn power_expansion_agrees_with_repeated_products(
        a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, p in 1u32..8
    ) {
        let f = LinearForm([a, b, c]);
        prop_assume!(!f.is_zero());
        let expected = HomPoly::linear(f).pow(p);
        prop_assert_eq!(expand_power(f, p).unwrap(), expected.coeffs().to_vec());
        // Evaluating at (1,1,1) gives (a+b+c)^p.
        prop_assert_eq!(expected.sum_of_coeffs(), num_traits::pow(BigInt::from(a + b + c), p as usize));
    }
}

#[test]
fn power_expansion_examples() {
    let xy = LinearForm([1, -1, 0]);
    let v: Vec<i64> = expand_power(xy, 2)
        .unwrap()
        .iter()
        .map(|x| i64::try_from(x).unwrap())
        .collect();
    // x^2, xy, xz, y^2, yz, z^2
    assert_eq!(v, vec![1, -2, 0, 1, 0, 0]);
    assert!(expand_power(xy, 0).is_err());
    assert!(expand_power(LinearForm([0, 0, 0]), 2).is_err());
}
