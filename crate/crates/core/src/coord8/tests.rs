use super::*;
use crate::exactcore::parse_poly;

fn p(s: &str) -> Poly {
    parse_poly(ring(), s).unwrap()
}

#[test]
fn table_quadratic_map_matches_sharp_map() {
    let h = Hypermatrix::symbolic();
    let t = build_peirce_table(&h);
    assert_eq!(t.sharp(&coords()), generators(&h));
}

#[test]
fn sharp_conditions_symbolic() {
    let j = presentation(&Hypermatrix::symbolic()).unwrap();
    let r = j.verify_sharp_conditions().unwrap();
    assert!(r.all_zero(), "{:?}", r.nonzero());
}

#[test]
fn cubic_form_has_integer_coefficients() {
    let n = cubic_form(&Hypermatrix::symbolic());
    assert!(n.terms().all(|(_, c)| c.is_integer()), "{n}");
    eprintln!("{} terms: {n}", n.len());
}

#[test]
fn d3_at_p4() {
    let h = Hypermatrix::ones_at(&[(1, 1, 1), (2, 2, 2)]).to_polys();
    let d = d_matrix(&h, 3, &coords());
    assert_eq!(d.entries(), &[p("0"), p("x23"), p("x13"), p("0")]);
}

#[test]
fn peirce_relations_symbolic() {
    let h = Hypermatrix::symbolic();
    assert!(verify_table_matches_sharp(&h).is_empty());
    assert_eq!(verify_xxy(&h).unwrap(), vec![]);
    assert_eq!(verify_pij_pji(&h).unwrap(), vec![]);
    assert_eq!(verify_peirce_normalisation(&h).unwrap(), vec![]);
}

#[test]
fn tampered_sharp_is_detected() {
    let h = Hypermatrix::symbolic();
    let mut sharp = generators(&h);
    sharp[0] = &sharp[0] + p("x11^2");
    let j = presentation_with_sharp(&h, sharp).unwrap();
    let r = j.verify_sharp_conditions().unwrap();
    assert!(!r.all_zero());
    assert!(r.double_sharp.iter().any(|f| !f.is_zero()));
}

#[test]
fn hypermatrix_files() {
    let a: Hypermatrix<Rational> = "1 0 0 0 0 0 1 0".parse().unwrap();
    let b: Hypermatrix<Rational> = r#"{"p111": "1", "p122": 1}"#.parse().unwrap();
    assert_eq!(a, b);
    assert_eq!(a, Hypermatrix::ones_at(&[(1, 1, 1), (1, 2, 2)]));
    let c: Hypermatrix<Rational> = "1/2 0 0 0 0 0 0 -3".parse().unwrap();
    assert_eq!(c.get(1, 1, 1), &crate::exactcore::ratio(1, 2));
    assert!("1 2 3".parse::<Hypermatrix<Rational>>().is_err());
    assert!(r#"{"p333": 1}"#.parse::<Hypermatrix<Rational>>().is_err());
}
