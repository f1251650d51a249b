use num_rational::Ratio;
use proptest::prelude::*;

use super::*;

fn ring3() -> Ring {
    Ring::new(&["x", "y", "z"]).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    parse_poly(r, s).unwrap()
}

#[test]
fn display_is_grlex_descending() {
    let r = ring3();
    let f = p(&r, "1 + z + y^2 - 2*x*y + x^2*z + 1/3*x");
    assert_eq!(f.to_string(), "x^2*z - 2*x*y + y^2 + 1/3*x + z + 1");
    assert_eq!(Polynomial::<Rational>::zero(&r).to_string(), "0");
    assert_eq!(p(&r, "-x + 2").to_string(), "-x + 2");
}

#[test]
fn parse_handles_parentheses_and_powers() {
    let r = ring3();
    assert_eq!(p(&r, "(x + y)^2"), p(&r, "x^2 + 2*x*y + y^2"));
    assert_eq!(p(&r, "-(x - y)*(x + y)"), p(&r, "y^2 - x^2"));
    assert!(parse_poly::<Rational>(&r, "w + 1").is_err());
    assert!(parse_poly::<Rational>(&r, "x +").is_err());
}

#[test]
fn mixing_rings_is_an_error() {
    let a = ring3();
    let b = ring3();
    let f: Polynomial = Polynomial::named(&a, "x");
    let g: Polynomial = Polynomial::named(&b, "x");
    assert_eq!(f.checked_add(&g), Err(ExactError::Context));
    assert_eq!(f.checked_mul(&g), Err(ExactError::Context));
}

#[test]
fn duplicate_variable_names_rejected() {
    assert!(Ring::new(&["a", "a"]).is_err());
}

#[test]
fn directional_derivative_matches_partials() {
    let r = ring3();
    let f = p(&r, "x^2*y + y*z^3");
    let dir = vec![p(&r, "1"), p(&r, "0"), p(&r, "2")];
    assert_eq!(f.directional_derivative(&dir).unwrap(), p(&r, "2*x*y + 6*y*z^2"));
    assert!(f.directional_derivative(&dir[..2]).is_err());
}

#[test]
fn substitution_is_simultaneous() {
    let r = ring3();
    let f = p(&r, "x - y");
    let g = f.substitute_some(&[(r.v("x"), p(&r, "y")), (r.v("y"), p(&r, "x"))]).unwrap();
    assert_eq!(g, p(&r, "y - x"));
}

#[test]
fn det_and_adjugate_3x3() {
    let r = ring3();
    let e = |s: &str| p(&r, s);
    let m = PolyMatrix::from_rows(
        &r,
        vec![vec![e("x"), e("1"), e("y")], vec![e("0"), e("z"), e("2")], vec![e("y"), e("x"), e("1")]],
    )
    .unwrap();
    // Sarrus rule.
    let sarrus = e("x*z*1 + 1*2*y + y*0*x - y*z*y - 1*0*1 - x*2*x");
    assert_eq!(m.det().unwrap(), sarrus);
    let prod = m.mul(&m.adjugate().unwrap()).unwrap();
    assert_eq!(prod, PolyMatrix::identity(&r, 3).scale(&sarrus));
}

#[test]
fn pfaffian_sign_conventions() {
    let r = ring3();
    let a = p(&r, "x");
    let m = PolyMatrix::skew_from_upper(&r, 2, &[a.clone()]).unwrap();
    assert_eq!(m.pfaffian().unwrap(), a);
    let names: Vec<String> = (0..10).map(|i| format!("m{i}")).collect();
    let r = Ring::new(&names).unwrap();
    let up: Vec<Polynomial> = names.iter().map(|n| Polynomial::named(&r, n)).collect();
    let m4 = PolyMatrix::skew_from_upper(&r, 4, &up[..6]).unwrap();
    let pf = m4.pfaffian().unwrap();
    assert_eq!(pf, parse_poly(&r, "m0*m5 - m1*m4 + m2*m3").unwrap());
    assert_eq!(&pf * &pf, m4.det().unwrap());
    // Odd size: the signed sub-Pfaffians lie in the kernel.
    let m5 = PolyMatrix::skew_from_upper(&r, 5, &up).unwrap();
    let pfs = m5.sub_pfaffians().unwrap();
    assert!(m5.mul_vec(&pfs).unwrap().iter().all(Polynomial::is_zero));
    assert_eq!(pfs[0], PolyMatrix::skew_from_upper(&r, 4, &[up[4].clone(), up[5].clone(), up[6].clone(), up[7].clone(), up[8].clone(), up[9].clone()]).unwrap().pfaffian().unwrap());
    assert!(PolyMatrix::from_rows(&r, vec![vec![up[0].clone()]]).unwrap().pfaffian().is_err());
}

#[test]
fn span_relations() {
    let r = ring3();
    let a = vec![p(&r, "x^2")];
    let b = vec![p(&r, "x^2"), p(&r, "x*y")];
    let c = span_compare(&a, &b).unwrap();
    assert_eq!(c.relation, SpanRelation::BContainsA);
    assert_eq!(c.first_missing_from_a(), Some(1));
    let c = span_compare(&b, &a).unwrap();
    assert_eq!(c.relation, SpanRelation::AContainsB);
    let d = vec![p(&r, "x^2 + x*y"), p(&r, "x^2 - x*y")];
    let c = span_compare(&b, &d).unwrap();
    assert_eq!(c.relation, SpanRelation::Equal);
    assert_eq!(c.a_in_b[0], Some(vec![ratio(1, 2), ratio(1, 2)]));
    let e = vec![p(&r, "y^2")];
    assert_eq!(span_compare(&a, &e).unwrap().relation, SpanRelation::Incomparable);
}

#[test]
fn generic_over_machine_ratios_and_floats() {
    let r = ring3();
    let f: Polynomial<Ratio<i64>> = parse_poly(&r, "x^2 - 1/2*y").unwrap();
    let g = &f * &f;
    assert_eq!(g.to_string(), "x^4 - x^2*y + 1/4*y^2");
    let h: Polynomial<f64> = parse_poly(&r, "x^2 + y").unwrap();
    assert_eq!(h.evaluate(&[2.0, 0.5, 0.0]).unwrap(), 4.5);
    assert!(span_equal(&[f.clone()], &[f.scale(&Ratio::new(3, 1))]).unwrap());
}

fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u16; 3])>> {
    prop::collection::vec((-5i64..=5, [0u16..3, 0u16..3, 0u16..3]), 0..6)
}

fn build(r: &Ring, t: &[(i64, [u16; 3])]) -> Polynomial {
    Polynomial::from_terms(r, t.iter().map(|(c, e)| (Monomial(e.to_vec()), rat(*c))))
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let r = ring3();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parse_roundtrip(a in arb_poly()) {
        let r = ring3();
        let a = build(&r, &a);
        let back: Polynomial = parse_poly(&r, &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn leibniz_rule(a in arb_poly(), b in arb_poly(), v in 0usize..3) {
        let r = ring3();
        let (a, b) = (build(&r, &a), build(&r, &b));
        let v = VarId(v);
        prop_assert_eq!((&a * &b).derivative(v), &a.derivative(v) * &b + &a * &b.derivative(v));
    }

    #[test]
    fn substitution_commutes_with_evaluation(a in arb_poly(), pt in [-4i64..4, -4i64..4, -4i64..4]) {
        let r = ring3();
        let a = build(&r, &a);
        let images = vec![p(&r, "x + y"), p(&r, "y*z"), p(&r, "1 - x")];
        let sub = a.map_into(&r, &images).unwrap();
        let pt: Vec<Rational> = pt.iter().map(|&x| rat(x)).collect();
        let inner: Vec<Rational> = images.iter().map(|g| g.evaluate(&pt).unwrap()).collect();
        prop_assert_eq!(sub.evaluate(&pt).unwrap(), a.evaluate(&inner).unwrap());
    }

    #[test]
    fn det_is_multiplicative(e in prop::collection::vec(-6i64..6, 18)) {
        let r = ring3();
        let c = |i: usize| Polynomial::<Rational>::int(&r, e[i]);
        let a = PolyMatrix::from_rows(&r, (0..3).map(|i| (0..3).map(|j| c(3 * i + j)).collect()).collect()).unwrap();
        let b = PolyMatrix::from_rows(&r, (0..3).map(|i| (0..3).map(|j| c(9 + 3 * i + j)).collect()).collect()).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn pfaffian_squares_to_det(e in prop::collection::vec(-6i64..6, 15)) {
        let r = ring3();
        let up: Vec<Polynomial> = e.iter().map(|&x| Polynomial::<Rational>::int(&r, x)).collect();
        let m = PolyMatrix::skew_from_upper(&r, 6, &up).unwrap();
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.det().unwrap());
    }
}
