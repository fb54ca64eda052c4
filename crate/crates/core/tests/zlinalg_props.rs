mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use sln_torus::zlinalg::{homology_at, IntMatrix};

#[test]
fn smith_contract_on_seeded_matrices() {
    let mut rng = common::rng(11);
    for _ in 0..200 {
        common::snf_contract(&common::random_matrix(&mut rng, 12, 9)).unwrap();
    }
}

#[test]
fn elimination_on_seeded_complexes() {
    let mut rng = common::rng(12);
    for _ in 0..100 {
        let rc = common::random_complex(&mut rng, 5, 8);
        common::gaussian_invariance(&mut rng, &rc).unwrap();
    }
}

fn arb_matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

proptest! {
    #[test]
    fn kernel_rank_matches_bareiss(m in arb_matrix(10)) {
        let h = homology_at(&IntMatrix::zeros(m.cols(), 0), &m).unwrap();
        prop_assert_eq!(h.free, m.cols() - m.rank());
        prop_assert!(h.is_free());
    }

    #[test]
    fn cokernel_order_is_gcd_of_minors(m in arb_matrix(6)) {
        // for a square nonsingular matrix the cokernel is finite of order |det|
        if m.is_square() && m.rows() > 0 {
            let det = m.determinant();
            let h = homology_at(&m, &IntMatrix::zeros(0, m.rows())).unwrap();
            if det != BigInt::from(0) {
                prop_assert_eq!(h.free, 0);
                let order: BigInt = h.torsion.iter().product();
                prop_assert_eq!(order, if det < BigInt::from(0) { -det } else { det });
            } else {
                prop_assert!(h.free > 0);
            }
        }
    }

    #[test]
    fn random_complexes_keep_homology(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let rc = common::random_complex(&mut rng, 5, 6);
        prop_assert_eq!(common::gaussian_invariance(&mut rng, &rc), Ok(()));
    }
}
