use super::*;
use crate::exactcore::{span_rank, SpanRelation};
use crate::sampling::rng;

#[test]
fn generator_counts_and_displayed_entries() {
    assert_eq!(m8_equations().len(), 10);
    assert_eq!(s6_equations().len(), 9);
    assert_eq!(c2_equations().len(), 9);
    let c = c_ring();
    assert_eq!(c2_equations().generators()[0], p(c, "th1*th2 - A12*th12 - A23*A3*A31"));
    let s = s_ring();
    assert_eq!(s6_equations().generators()[3], p(s, "s22*s33 - s23^2 - t*sig1^2"));
}

#[test]
fn trace_of_the_w_equation_vanishes() {
    // tr(X2^† X1 X2) = det X2 tr X1 = 0, so the E block has E22 = -E11
    let m = m8_equations();
    let e11 = &m.generators()[1];
    let e22 = &m.generators()[4];
    assert!((e11 + e22).is_zero());
    assert_eq!(span_rank(m.generators()), 9);
    assert_eq!(dependencies(&m).len(), 1);
}

#[test]
fn specializations_match_spans() {
    for which in [Specialization::M8, Specialization::S6, Specialization::C2] {
        let r = verify_specialization(which).unwrap();
        assert_eq!(r.relation, Some(SpanRelation::Equal), "{which}: missing {:?}", r.missing);
        assert!(r.ok());
    }
    let m8 = verify_specialization(Specialization::M8).unwrap();
    assert_eq!(m8.specialized.len(), 9);
    assert_eq!(m8.target_dependencies, vec!["(1)*E11 + (1)*E22 = 0".to_string()]);
}

#[test]
fn slices_h12_h11() {
    let h12 = verify_specialization(Specialization::H12).unwrap();
    let h11 = verify_specialization(Specialization::H11).unwrap();
    assert!(h12.relation.is_none() && h11.relation.is_none());
    assert_eq!(h12.specialized.len(), 9);
    let ring = crate::coord8::ring();
    for r in [&h12, &h11] {
        let eqs = r.equations.as_ref().unwrap();
        assert!(eqs.generators().iter().all(|f| f.degree_in(ring.v("p111")) == 0));
    }
    assert!(h11.equations.unwrap().generators().iter().all(|f| f.degree_in(ring.v("p121")) == 0));
    assert!(compose_h12_c2().unwrap());
}

#[test]
fn unknown_dictionary() {
    assert!(matches!("x9".parse::<Specialization>(), Err(RelError::UnknownDictionary(_))));
    assert!(matches!(dictionary("nope"), Err(RelError::UnknownDictionary(_))));
}

#[test]
fn perturbed_dictionary_is_caught() {
    let bad = dictionary("c2").unwrap().with_image("u1", "-th12");
    let r = specialize_with(Specialization::C2, &bad).unwrap();
    assert_ne!(r.relation, Some(SpanRelation::Equal));
    assert!(!r.missing.is_empty());
}

#[test]
fn group_actions_are_covariant() {
    let m = m8_action_certificate();
    assert!(m.ok(), "{:?}", m.generators);
    let s = s6_action_certificate();
    assert!(s.ok(), "{:?}", s.generators);
}

#[test]
fn cluster_map_parts() {
    let mut r = rng(11);
    for part in [Part::I, Part::II] {
        let rep = verify_cluster_map(part, 12, &mut r).unwrap();
        assert!(rep.ok(), "{rep:#?}");
    }
}

#[test]
fn cluster_map_with_a_wrong_map_fails() {
    let mut r = rng(12);
    let bad = dictionary("c2-to-m8").unwrap().with_image("w1", "th3 - 1/2*lam*A12");
    let rep = verify_cluster_map_with(Part::I, &bad, 5, &mut r).unwrap();
    assert!(rep.target_failures > 0);
    assert!(!rep.ok());
}
