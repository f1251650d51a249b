use proptest::prelude::*;

use keyvar::coord8::Hypermatrix;
use keyvar::exactcore::EquationSet;
use keyvar::grading::{canonical_arithmetic, check_homogeneous, solve_weight_constraints, WeightSystem};
use keyvar::hvariety::{classify_orbit, equations, GroupElement};
use keyvar::sampling::rng;
use keyvar::Rational;

fn homogeneous(eqs: &EquationSet, w: &WeightSystem) -> bool {
    check_homogeneous(eqs, w).unwrap().iter().all(|h| h.is_homogeneous())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // a two-row system is homogeneous iff each of its rows is, and row
    // operations keep it so
    #[test]
    fn bigrading_rows(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        prop_assume!(a * d - b * c != 0);
        let eqs = equations();
        let m = WeightSystem::wtmat().combine_rows(&[vec![a, b], vec![c, d]]).unwrap();
        let rows = (0..2).all(|k| homogeneous(&eqs, &m.row(k)));
        prop_assert_eq!(homogeneous(&eqs, &m), rows);
        prop_assert!(rows);
    }

    #[test]
    fn weight_sum_identity_on_the_lattice(coeffs in proptest::collection::vec(-6i64..=6, 7)) {
        let eqs = equations();
        let lat = solve_weight_constraints(&eqs, &[]).unwrap();
        prop_assert_eq!(lat.dimension(), 7);
        let q: Vec<Rational> = coeffs.iter().map(|n| Rational::from_integer((*n).into())).collect();
        let w = lat.point(&q);
        prop_assert!(homogeneous(&eqs, &w));
        prop_assert!(canonical_arithmetic(&w).unwrap().sum_identity_holds());
    }

    #[test]
    fn orbit_is_invariant_under_translates(p in proptest::array::uniform8(-2i64..=2), seed in any::<u64>()) {
        let p = Hypermatrix::from_ints(p);
        let g = GroupElement::random(&mut rng(seed));
        let q = g.apply_hypermatrix(&p).unwrap();
        prop_assert_eq!(classify_orbit(&p).label, classify_orbit(&q).label);
    }
}
