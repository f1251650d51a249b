use super::*;
use crate::coord8::{ring, var};
use crate::exactcore::{EquationSet, Polynomial};
use crate::hvariety::equations;
use crate::sampling::{int_in, rng};
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn h12() -> EquationSet {
    let p111 = ring().v("p111");
    let gens = equations()
        .iter()
        .map(|(l, f)| (l.to_string(), f.substitute_some(&[(p111, Polynomial::one(ring()))]).unwrap()))
        .collect::<Vec<_>>();
    EquationSet::new(ring(), gens).unwrap()
}

fn all_homogeneous(eqs: &EquationSet, w: &WeightSystem) -> bool {
    check_homogeneous(eqs, w).unwrap().iter().all(|h| h.is_homogeneous())
}

#[test]
fn standard_weights_make_generators_homogeneous() {
    let report = check_homogeneous(&equations(), &WeightSystem::standard()).unwrap();
    for h in &report {
        let expect = if h.label.starts_with("G1") || h.label.starts_with("G2") || h.label.starts_with("G3") { "3" } else { "4" };
        assert_eq!(h.weight.as_deref(), Some(&[expect.to_string()][..]), "{}", h.label);
    }
}

#[test]
fn bigradings_and_row_operations() {
    let eqs = equations();
    let m = WeightSystem::wtmat();
    assert!(all_homogeneous(&eqs, &m));
    for k in 0..2 {
        assert!(all_homogeneous(&eqs, &m.row(k)));
    }
    assert_eq!(m.combine_rows(&[vec![1, -2], vec![0, 1]]).unwrap(), WeightSystem::wtmat2());
    assert_eq!(m.combine_rows(&[vec![0, 1], vec![1, -1]]).unwrap(), WeightSystem::wtmat3());
    assert!(all_homogeneous(&eqs, &WeightSystem::wtmat2()));
    assert!(all_homogeneous(&eqs, &WeightSystem::wtmat3()));
    // the first row of the bigrading is the standard grading
    for n in WeightSystem::standard().names() {
        assert_eq!(m.row(0).get(n), WeightSystem::standard().get(n));
    }
}

#[test]
fn bigrading_detects_a_clash_in_one_row() {
    let mut rows = std::collections::BTreeMap::new();
    for n in WeightSystem::wtmat().names() {
        let mut w = WeightSystem::wtmat().get(n).unwrap().to_vec();
        if n == "u1" {
            w[1] = q(0);
        }
        rows.insert(n.to_string(), w);
    }
    let broken = WeightSystem::from_map(2, rows).unwrap();
    let eqs = equations();
    assert!(!all_homogeneous(&eqs, &broken));
    assert!(all_homogeneous(&eqs, &broken.row(0)));
    assert!(!all_homogeneous(&eqs, &broken.row(1)));
}

#[test]
fn weights_5052_on_h12() {
    let eqs = h12();
    assert!(eqs.generators().iter().all(|f| f.degree_in(ring().v("p111")) == 0));
    assert!(all_homogeneous(&eqs, &WeightSystem::weights_5052()));
}

#[test]
fn canonical_numbers() {
    let cd = canonical_arithmetic(&WeightSystem::standard()).unwrap();
    assert_eq!((cd.c.clone(), cd.d.clone(), cd.delta.clone()), (q(4), q(6), q(10)));
    assert_eq!(cd.weight_sum, q(20));
    assert!(cd.sum_identity_holds());
    assert_eq!(cd.omega_h_twist, q(-10));
    assert_eq!(cd.omega_p_twist, q(-20));

    let names: Vec<&str> = crate::coord8::COORD_NAMES.iter().chain(crate::coord8::P_NAMES.iter()).copied().collect();
    let toy = WeightSystem::single(names.iter().map(|n| (*n, 1)));
    let cd = canonical_arithmetic(&toy).unwrap();
    assert_eq!((cd.c, cd.d, cd.omega_h_twist), (q(3), q(3), q(-3)));
}

#[test]
fn numerator_and_its_symmetries() {
    let w = WeightSystem::standard();
    let res = ResolutionDegrees::from_weights(&w).unwrap();
    assert_eq!(res.shifts.iter().map(|s| s.len()).collect::<Vec<_>>(), vec![1, 9, 16, 9, 1]);
    assert!(res.pairing_holds());
    let num = hilbert_numerator(&w).unwrap();
    assert_eq!(num, TPoly(vec![1, 0, 0, -6, -1, 12, -1, -6, 0, 0, 1]));
    assert_eq!(num.to_string(), "1 - 6t^3 - t^4 + 12t^5 - t^6 - 6t^7 + t^10");
    assert!(num.is_palindromic(10));
    assert_eq!(num.order_at_one(), 4);
}

// k-th derivative at t = 1, divided by k!: the Taylor coefficient of (t - 1)^k.
fn taylor_at_one(c: &[i64], k: u32) -> Rational {
    let mut acc = q(0);
    for (e, &a) in c.iter().enumerate() {
        let e = e as i64;
        if e >= k as i64 {
            let binom = (0..k as i64).fold(q(1), |b, i| b * q(e - i) / q(i + 1));
            acc += binom * q(a);
        }
    }
    acc
}

#[test]
fn fano_numbers() {
    let inv = fano_invariants(&WeightSystem::standard(), 9, 1).unwrap();
    assert_eq!(inv.degree, Rational::new(11.into(), 2.into()));
    assert_eq!((inv.h0, inv.genus), (5, 3));

    // oracle: Num/(1-t)^4 at 1 is the Taylor coefficient of (t-1)^4; the
    // remaining denominator (1-t)^4 (1+t)^3 contributes 2^3.
    let num = hilbert_numerator(&WeightSystem::standard()).unwrap();
    for k in 0..4 {
        assert_eq!(taylor_at_one(&num.0, k), q(0));
    }
    assert_eq!(taylor_at_one(&num.0, 4), q(44));
    assert_eq!(taylor_at_one(&num.0, 4) / q(8), inv.degree);
    // oracle: t-coefficient of Num (1 + 5t + ...) with Num = 1 + 0t + ...
    assert_eq!(num.0[1] + 5 * num.0[0], inv.h0);
}

#[test]
fn ambient_series_control() {
    let s = HilbertSeries { numerator: TPoly(vec![1]), denominator: [vec![1; 14], vec![2; 3]].concat() };
    let inv = s.invariants(0).unwrap();
    assert_eq!(inv.degree, Rational::new(1.into(), 8.into()));
    assert_eq!(inv.h0, 14);
    assert_eq!(s.expand(2)[2], 14 * 15 / 2 + 3);
}

#[test]
fn wrong_weights_are_rejected() {
    let names: Vec<&str> = crate::coord8::COORD_NAMES.iter().chain(crate::coord8::P_NAMES.iter()).copied().collect();
    let toy = WeightSystem::single(names.iter().map(|n| (*n, 1)));
    assert!(!all_homogeneous(&equations(), &toy));
    // the uniform lists still give (1-t)^4 (1 + 4t + t^2); bumping one u breaks it
    assert_eq!(hilbert_numerator(&toy).unwrap().order_at_one(), 4);
    let bumped = WeightSystem::single(names.iter().map(|n| (*n, if *n == "u1" { 3 } else if n.starts_with('u') { 2 } else { 1 })));
    assert!(!all_homogeneous(&equations(), &bumped));
    assert_eq!(hilbert_numerator(&bumped).unwrap().order_at_one(), 1);
    assert!(matches!(fano_invariants(&bumped, 9, 1), Err(GradingError::NumeratorNotDivisible(4))));
}

#[test]
fn weight_lattice_of_h13() {
    let lat = solve_weight_constraints(&equations(), &[]).unwrap();
    assert_eq!(lat.vars.len(), 17);
    assert!(lat.contains(&WeightSystem::standard()).unwrap());
    assert!(lat.contains(&WeightSystem::wtmat().row(1)).unwrap());
    let mut r = rng(3);
    for _ in 0..20 {
        let coeffs: Vec<Rational> = (0..lat.dimension()).map(|_| q(int_in(&mut r, -5, 5))).collect();
        let w = lat.point(&coeffs);
        assert!(all_homogeneous(&equations(), &w));
        assert!(canonical_arithmetic(&w).unwrap().sum_identity_holds());
    }
    let fixed = solve_weight_constraints(&equations(), &[("u1", q(2)), ("x11", q(1))]).unwrap();
    assert_eq!(fixed.dimension() + 2, lat.dimension());
}

#[test]
fn infeasible_fixing_is_reported() {
    // u1 u2 and x11 must share a weight, so 1 + 1 = 1 is impossible
    let f = var("u1") * var("u2") - var("x11");
    let eqs = EquationSet::new(ring(), [("f".to_string(), f)]).unwrap();
    let err = solve_weight_constraints(&eqs, &[("u1", q(1)), ("u2", q(1)), ("x11", q(1))]).unwrap_err();
    assert_eq!(err, GradingError::InfeasibleWeights);
}

#[test]
fn weight_files() {
    let w = WeightSystem::from_json(r#"{"x11": 1, "u1": "2", "p111": "1/2"}"#).unwrap();
    assert_eq!(w.weight("p111").unwrap(), &Rational::new(1.into(), 2.into()));
    let b = WeightSystem::from_json(r#"{"x11": [1, 1], "u1": [2, -1]}"#).unwrap();
    assert_eq!(b.rows(), 2);
    assert!(WeightSystem::from_json(r#"{"x11": [1, 1], "u1": 2}"#).is_err());
    assert!(WeightSystem::from_json("[1]").is_err());
}
