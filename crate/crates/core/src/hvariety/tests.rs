use super::group::{hyperdeterminant_exponent, rule_certificate, span_certificate};
use super::*;
use crate::coord8::{coords, ui, xi};
use crate::exactcore::{rat, SpanRelation};
use crate::sampling::rng_for;

#[test]
fn nine_generators_and_g6() {
    let eqs = equations();
    assert_eq!(eqs.len(), 9);
    let h = Hypermatrix::symbolic();
    let x = coords();
    let g6 = &x[ui(1)] * &x[ui(2)] + crate::coord8::det2(&crate::coord8::d_matrix(&h, 3, &x));
    assert_eq!(eqs.generators()[8], g6);
}

#[test]
fn rule_certificates_symbolic() {
    for k in 1..=3 {
        let r = rule_certificate(k);
        assert!(r.is_empty(), "rule {k}: {:?}", r.iter().map(|(l, _)| l).collect::<Vec<_>>());
    }
}

#[test]
fn permutations_preserve_span() {
    for perm in Perm3::ALL {
        let c = span_certificate(&GroupElement::permutation(perm));
        assert_eq!(c.relation, SpanRelation::Equal, "{}", perm.cycle_string());
    }
    assert_eq!(span_certificate(&GroupElement::swap_all()).relation, SpanRelation::Equal);
}

#[test]
fn hyperdeterminant_values_and_character() {
    assert_eq!(orbit::hyperdeterminant_value(&SpecialPoint::P4.hypermatrix()), rat(1));
    assert_eq!(orbit::hyperdeterminant_value(&SpecialPoint::P3.hypermatrix()), rat(0));
    for k in 1..=3 {
        assert_eq!(hyperdeterminant_exponent(k), Some(2));
    }
}

#[test]
fn representatives_classify() {
    let mut rng = rng_for(7, "orbit");
    for sp in SpecialPoint::ALL {
        let h = sp.hypermatrix();
        assert_eq!(classify_orbit(&h).label, sp.expected_orbit());
        for _ in 0..5 {
            let g = GroupElement::random(&mut rng);
            assert_eq!(classify_orbit(&g.apply_hypermatrix(&h).unwrap()).label, sp.expected_orbit());
        }
    }
    assert_eq!(classify_orbit(&SpecialPoint::P3.hypermatrix()).to_string(), "O3, D_H = 0, flattening ranks (2,2,2)");
}

#[test]
fn singular_group_element_rejected() {
    let z = rat(0);
    let one = rat(1);
    let id = [[one.clone(), z.clone()], [z.clone(), one.clone()]];
    let sing = [[one.clone(), one.clone()], [one.clone(), one]];
    let e = GroupElement::rational([id.clone(), sing, id], Perm3::ID);
    assert_eq!(e.unwrap_err(), HError::SingularGroupElement(2));
}

#[test]
fn p3_p4_fiber_spans() {
    for sp in [SpecialPoint::P3, SpecialPoint::P4] {
        let c = fiber::span_certificate(sp).unwrap();
        assert_eq!(c.relation, SpanRelation::Equal, "{sp:?}");
    }
}

#[test]
fn fiber_components_sampled() {
    let mut rng = rng_for(7, "fiber");
    for sp in SpecialPoint::ALL {
        for c in fiber::check_components(sp, 10, &mut rng).unwrap() {
            assert!(c.ok(), "{sp:?} {c:?}");
        }
    }
}

#[test]
fn chart_variants() {
    let r = chart_reduce_u1(ChartVariant::Corrected);
    assert!(r.residuals.is_empty());
    assert_eq!(r.free_vars.len(), 12);
    assert_eq!(r.dimension, 13);
    assert!(chart_reduce_u1(ChartVariant::OmitU3).residual_labels().contains(&"G5"));
    assert_eq!(chart_reduce_u1(ChartVariant::Literal).residual_labels(), vec!["G2a", "G2b", "G4", "G6"]);
}

#[test]
fn sampled_points_and_pfaffians() {
    let mut rng = rng_for(7, "sample");
    let mut tested = 0;
    while tested < 10 {
        let pt = sample_point(&mut rng, &[]).unwrap();
        if pt.x[xi(1, 1)] == rat(0) {
            continue;
        }
        assert!(chart::mt_pfaffians_at(&pt).unwrap().iter().all(|v| v == &rat(0)));
        tested += 1;
    }
    let pt = sample_point(&mut rng, &[("p121", rat(0)), ("p112", rat(0)), ("p211", rat(0)), ("p111", rat(1))]).unwrap();
    assert_eq!(pt.p.get(1, 1, 1), &rat(1));
    assert!(sample_point(&mut rng, &[("u2", rat(1))]).is_err());
}

#[test]
fn radicals_at_special_points() {
    let mut rng = rng_for(7, "radical");
    for sp in SpecialPoint::ALL {
        let r = radical_locus_check(sp, 5, &mut rng).unwrap();
        assert!(r.ok(), "{r:?}");
    }
}

#[test]
fn open_orbit_is_nondegenerate() {
    let mut rng = rng_for(7, "open");
    let t = std::time::Instant::now();
    let r = radical::open_orbit_check(2, 10, &mut rng).unwrap();
    eprintln!("open orbit 20 checks: {:?}", t.elapsed());
    assert_eq!(r.members, 0);
    assert_eq!(r.disagreements, 0);
}
