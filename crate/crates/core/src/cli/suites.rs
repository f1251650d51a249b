use serde_json::json;

use crate::coord8::{self, xi, Hypermatrix, Residual};
use crate::exactcore::{EquationSet, SpanComparison, SpanRelation};
use crate::grading::{
    canonical_arithmetic, check_homogeneous, fano_invariants, hilbert_numerator, solve_weight_constraints,
    WeightSystem,
};
use crate::hvariety::chart::mt_pfaffians_at;
use crate::hvariety::group::{hyperdeterminant_exponent, rule_certificate, span_certificate};
use crate::hvariety::radical::{open_orbit_check, stated_norm};
use crate::hvariety::{
    self, chart_reduce_u1, classify_orbit, fiber, sample_point, ChartVariant, GroupElement, Perm3, SpecialPoint,
};
use crate::relatives::{
    compose_h12_c2, dictionary, m8_action_certificate, s6_action_certificate, specialize_with, verify_cluster_map,
    Part, Specialization,
};
use crate::report::Claim;
use crate::sampling::{rng_for, Rng8};
use crate::{Poly, Rational};

use super::{Inject, Options, Suite};

fn residual_strings(r: &[Residual]) -> Vec<String> {
    r.iter().map(|(l, p)| format!("{l}: {p}")).collect()
}

fn error_claim(id: &str, reference: &str, e: impl std::fmt::Display) -> Claim {
    Claim::from_residuals(id, reference, vec![format!("internal error: {e}")])
}

fn span_claim(id: &str, reference: &str, c: &SpanComparison<Rational>, la: &str, lb: &str) -> Claim {
    let mut res = Vec::new();
    if c.relation != SpanRelation::Equal {
        if let Some(i) = c.a_in_b.iter().position(Option::is_none) {
            res.push(format!("{la}[{i}] outside span of {lb}"));
        }
        if let Some(i) = c.b_in_a.iter().position(Option::is_none) {
            res.push(format!("{lb}[{i}] outside span of {la}"));
        }
    }
    Claim::from_residuals(id, reference, res)
        .with_witness(json!({"relation": format!("{:?}", c.relation), "rank_a": c.rank_a, "rank_b": c.rank_b}))
}

fn at_least(opts: &Options, n: usize) -> usize {
    opts.samples.max(n)
}

pub(super) fn verify_axioms(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let h = Hypermatrix::symbolic();
    let pres = if opts.inject == Some(Inject::Sharp) {
        let mut sharp = coord8::generators(&h);
        sharp[0] = &sharp[0] + coord8::var("x11").pow(2);
        coord8::presentation_with_sharp(&h, sharp)
    } else {
        coord8::presentation(&h)
    };
    match pres.and_then(|j| j.verify_sharp_conditions()) {
        Ok(r) => {
            let nz = |v: &[Poly], tag: &str| -> Vec<String> {
                v.iter().enumerate().filter(|(_, f)| !f.is_zero()).map(|(i, f)| format!("{tag}[{i}]: {f}")).collect()
            };
            let adj = if r.adjoint.is_zero() { vec![] } else { vec![format!("adjoint: {}", r.adjoint)] };
            claims.push(Claim::from_residuals("axioms.sharp1", "T(x#, y) = d_y N(x)", adj));
            claims.push(Claim::from_residuals("axioms.sharp2", "x## = N(x) x", nz(&r.double_sharp, "double_sharp")));
            claims.push(Claim::from_residuals("axioms.sharp3", "1 # y = T(y) 1 - y", nz(&r.unit_sharp, "unit_sharp")));
            lines.push(format!("sharp conditions: {}", if r.all_zero() { "zero residuals" } else { "NONZERO residuals" }));
        }
        Err(e) => {
            for id in ["axioms.sharp1", "axioms.sharp2", "axioms.sharp3"] {
                claims.push(error_claim(id, "sharp conditions", &e));
            }
        }
    }

    let hp = h.clone();
    claims.push(Claim::from_residuals(
        "table.sharp_map",
        "quadratic map of the Peirce table = the sharp map of P",
        residual_strings(&coord8::verify_table_matches_sharp(&hp)),
    ));
    let table = [
        ("table.xxy", "x_i x_j y relations of the Peirce table", coord8::verify_xxy(&hp)),
        ("table.pij_pji", "P_ij P_ji products", coord8::verify_pij_pji(&hp)),
        ("table.normalisation", "Peirce normalisation", coord8::verify_peirce_normalisation(&hp)),
    ];
    for (id, r, res) in table {
        claims.push(match res {
            Ok(v) => Claim::from_residuals(id, r, residual_strings(&v)),
            Err(e) => error_claim(id, r, e),
        });
    }

    for sp in [SpecialPoint::Origin, SpecialPoint::P2, SpecialPoint::P3] {
        let n = coord8::cubic_form(&sp.hypermatrix().to_polys());
        let stated = stated_norm(sp).expect("displayed");
        let ok = n.to_string() == stated.to_string();
        let res = if ok { vec![] } else { vec![format!("N = {n}, expected {stated}")] };
        claims.push(Claim::from_residuals(&format!("norm.{}", sp.name()), "N_P at the special point", res));
        lines.push(format!("N at {}: {n}", sp.name()));
    }

    for k in 1..=3 {
        claims.push(Claim::from_residuals(
            &format!("equivariance.rule{k}"),
            "G_k -> g_k G_k, u_k# -> det(g_k)^2 u_k#, others -> det(g_k)",
            residual_strings(&rule_certificate(k)),
        ));
    }
    for perm in Perm3::ALL {
        let c = span_certificate(&GroupElement::permutation(perm));
        claims.push(span_claim(
            &format!("equivariance.s3.{}", perm.cycle_string()),
            "S3 permutes the generators up to span",
            &c,
            "G",
            "sigma(G)",
        ));
    }
    let exps: Vec<Option<u32>> = (1..=3).map(hyperdeterminant_exponent).collect();
    let res = exps
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != Some(2))
        .map(|(k, e)| format!("factor {}: exponent {e:?}", k + 1))
        .collect();
    claims.push(Claim::from_residuals("equivariance.dh_character", "D_H o g = det(g_k)^2 D_H", res));
    Suite { claims, lines }
}

fn translates_agree(p: &Hypermatrix<Rational>, n: usize, rng: &mut Rng8) -> Result<Vec<String>, hvariety::HError> {
    let base = classify_orbit(p).label;
    let mut bad = Vec::new();
    for i in 0..n {
        let g = GroupElement::random(rng);
        let q = g.apply_hypermatrix(p)?;
        let l = classify_orbit(&q).label;
        if l != base {
            bad.push(format!("translate {i}: {l:?} != {base:?}"));
        }
    }
    Ok(bad)
}

pub(super) fn classify(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let mut rng = rng_for(opts.seed, "classify");
    const R: &str = "orbits of GL2^3 on 2x2x2 hypermatrices";
    if let Some(p) = &opts.hypermatrix {
        let c = classify_orbit(p);
        lines.push(c.to_string());
        claims.push(match translates_agree(p, 20, &mut rng) {
            Ok(bad) => Claim::from_residuals("classify.input.translates", R, bad),
            Err(e) => error_claim("classify.input.translates", R, e),
        }
        .with_witness(serde_json::to_value(&c).expect("serializable")));
        return Suite { claims, lines };
    }
    for sp in SpecialPoint::ALL {
        let c = classify_orbit(&sp.hypermatrix());
        lines.push(format!("{}: {c}", sp.name()));
        let res = if c.label == sp.expected_orbit() {
            vec![]
        } else {
            vec![format!("{:?}, expected {:?}", c.label, sp.expected_orbit())]
        };
        claims.push(
            Claim::from_residuals(&format!("classify.{}", sp.name()), R, res)
                .with_witness(serde_json::to_value(&c).expect("serializable")),
        );
        let id = format!("classify.{}.translates", sp.name());
        claims.push(match translates_agree(&sp.hypermatrix(), 20, &mut rng) {
            Ok(bad) => Claim::from_residuals(&id, R, bad),
            Err(e) => error_claim(&id, R, e),
        });
    }
    Suite { claims, lines }
}

pub(super) fn fiber(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    for (sp, r) in [
        (SpecialPoint::P3, "fiber over p3 = the determinantal system of a symmetric 3x3 matrix"),
        (SpecialPoint::P4, "fiber over p4 = 2x2 minors of a 3x3 matrix"),
    ] {
        let c = fiber::span_certificate(sp).expect("p3 and p4 have certificates");
        lines.push(format!("fiber {}: {:?}", sp.name(), c.relation));
        claims.push(span_claim(&format!("fiber.{}.span", sp.name()), r, &c, "fiber", "minors"));
    }
    let n = at_least(opts, 20);
    let mut rng = rng_for(opts.seed, "fiber");
    for sp in [SpecialPoint::Origin, SpecialPoint::P1, SpecialPoint::P2] {
        let id = format!("fiber.{}.components", sp.name());
        let r = "components of the fiber vanish the fiber equations";
        claims.push(match fiber::check_components(sp, n, &mut rng) {
            Ok(checks) => {
                let bad = checks
                    .iter()
                    .filter(|c| !c.ok())
                    .map(|c| format!("{}: {} fiber, {} component failures", c.component, c.fiber_failures, c.component_failures))
                    .collect();
                Claim::from_residuals(&id, r, bad).with_witness(json!(checks))
            }
            Err(e) => error_claim(&id, r, e),
        });
    }
    Suite { claims, lines }
}

pub(super) fn chart(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let variant = if opts.inject == Some(Inject::Chart) { ChartVariant::OmitU3 } else { ChartVariant::Corrected };
    let rep = chart_reduce_u1(variant);
    let literal = chart_reduce_u1(ChartVariant::Literal);
    lines.push(format!("u1-chart ({variant:?}): {} residuals, dimension {}", rep.residuals.len(), rep.dimension));
    let r = "u1 = 1: x1 = D3 x2, u3 = -det D2, u2 = -det D3";
    claims.push(Claim::from_residuals("chart.u1.reduction", r, residual_strings(&rep.residuals)).with_witness(json!({
        "variant": rep.variant,
        "free_vars": rep.free_vars,
        "literal_u2_minus_det_d1_residuals": literal.residual_labels(),
    })));
    let res = if rep.dimension == 13 { vec![] } else { vec![format!("dimension {}", rep.dimension)] };
    claims.push(Claim::from_residuals("chart.u1.dimension", "the chart is 13-dimensional", res));

    let n = at_least(opts, 30);
    let mut rng = rng_for(opts.seed, "chart");
    let zero = Rational::from_integer(0.into());
    let mut bad = Vec::new();
    let mut tested = 0;
    while tested < n {
        let pt = match sample_point(&mut rng, &[]) {
            Ok(pt) => pt,
            Err(e) => {
                bad.push(format!("internal error: {e}"));
                break;
            }
        };
        if pt.x[xi(1, 1)] == zero {
            continue;
        }
        match mt_pfaffians_at(&pt) {
            Ok(v) if v.iter().all(|q| q == &zero) => {}
            Ok(v) => bad.push(format!("sample {tested}: Pfaffians {:?}", v.iter().map(|q| q.to_string()).collect::<Vec<_>>())),
            Err(e) => bad.push(format!("sample {tested}: {e}")),
        }
        tested += 1;
    }
    lines.push(format!("Pfaffians of M_T: {} of {tested} samples nonzero", bad.len()));
    claims.push(
        Claim::from_residuals("chart.pfaffians", "the 4x4 Pfaffians of M_T vanish on the x11-chart", bad)
            .with_witness(json!({"samples": tested})),
    );
    Suite { claims, lines }
}

pub(super) fn radicals(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let n = at_least(opts, 20);
    let mut rng = rng_for(opts.seed, "radicals");
    for sp in SpecialPoint::ALL {
        let id = format!("radicals.{}", sp.name());
        let r = "radical of J_P at the special point";
        claims.push(match hvariety::radical_locus_check(sp, n, &mut rng) {
            Ok(rep) => {
                let mut res = Vec::new();
                if rep.on_locus_members != rep.on_locus {
                    res.push(format!("{} of {} locus points not radical", rep.on_locus - rep.on_locus_members, rep.on_locus));
                }
                if rep.off_locus_members != 0 {
                    res.push(format!("{} off-locus points radical", rep.off_locus_members));
                }
                if rep.disagreements != 0 {
                    res.push(format!("{} disagreements between the two characterisations", rep.disagreements));
                }
                if rep.norm_matches == Some(false) {
                    res.push(format!("N = {}", rep.norm));
                }
                lines.push(format!("radical at {}: {}/{} on, {}/{} off", sp.name(), rep.on_locus_members, rep.on_locus, rep.off_locus_members, rep.off_locus));
                Claim::from_residuals(&id, r, res).with_witness(json!(rep))
            }
            Err(e) => error_claim(&id, r, e),
        });
    }
    let r = "D_H(P) != 0 implies the radical is zero";
    claims.push(match open_orbit_check(50, 100, &mut rng) {
        Ok(rep) => {
            let mut res = Vec::new();
            if rep.members != 0 {
                res.push(format!("{} radical elements", rep.members));
            }
            if rep.disagreements != 0 {
                res.push(format!("{} disagreements", rep.disagreements));
            }
            lines.push(format!("open orbit: {} elements, {} radical", rep.elements, rep.members));
            Claim::from_residuals("radicals.open_orbit", r, res).with_witness(json!(rep))
        }
        Err(e) => error_claim("radicals.open_orbit", r, e),
    });
    Suite { claims, lines }
}

pub(super) fn specialize(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    for which in Specialization::ALL {
        let id = format!("specialize.{}", which.name());
        let r = match which {
            Specialization::M8 => "yz = det X2, yW = X2^adj X1 X2, X2 W = z X1 X2, det W = z^2 det X1",
            Specialization::S6 => "S sigma = 0, S^adj = t sigma sigma^T",
            Specialization::C2 => "th_i th_j = A_ij th_ij + A_jk A_k A_ki and companions",
            Specialization::H12 => "p111 = 1",
            Specialization::H11 => "p111 = p121 = 1",
        };
        let dict = match dictionary(which.name()) {
            Ok(d) if which == Specialization::C2 && opts.inject == Some(Inject::Dictionary) => d.with_image("u1", "-th12"),
            Ok(d) => d,
            Err(e) => {
                claims.push(error_claim(&id, r, e));
                continue;
            }
        };
        claims.push(match specialize_with(which, &dict) {
            Ok(rep) => {
                let mut res: Vec<String> = rep.missing.iter().map(|l| format!("{l} outside the other span")).collect();
                if !rep.ok() && res.is_empty() {
                    res.push(format!("relation {:?}", rep.relation));
                }
                lines.push(match rep.relation {
                    Some(rel) => format!("{}: {rel:?} (ranks {} / {})", which.name(), rep.rank_specialized, rep.rank_target.unwrap_or(0)),
                    None => format!("{}: rank {}", which.name(), rep.rank_specialized),
                });
                Claim::from_residuals(&id, r, res).with_witness(json!({
                    "relation": rep.relation.map(|x| format!("{x:?}")),
                    "rank_specialized": rep.rank_specialized,
                    "rank_target": rep.rank_target,
                    "target_len": rep.target_len,
                    "target_dependencies": rep.target_dependencies,
                }))
            }
            Err(e) => error_claim(&id, r, e),
        });
    }
    let r = "H12 then the C2 slice equals the C2 slice of H13";
    claims.push(match compose_h12_c2() {
        Ok(ok) => Claim::new("specialize.compose", r, ok),
        Err(e) => error_claim("specialize.compose", r, e),
    });
    for (id, cert) in [("action.m8", m8_action_certificate()), ("action.s6", s6_action_certificate())] {
        let bad = cert.generators.iter().filter(|(_, ok)| !ok).map(|(l, _)| format!("{l} not covariant")).collect();
        claims.push(Claim::from_residuals(id, "covariance under the group action", bad));
    }
    Suite { claims, lines }
}

pub(super) fn cluster_maps(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let n = at_least(opts, 30);
    for (part, r) in [(Part::I, "A3 = 1: X_C2 maps into M8"), (Part::II, "A3 = 1, A1 = -1: X_C2 maps into the cone over S6")] {
        let id = format!("cluster_map.{part:?}").to_lowercase();
        let mut rng = rng_for(opts.seed, &id);
        claims.push(match verify_cluster_map(part, n, &mut rng) {
            Ok(rep) => {
                let mut res = Vec::new();
                if rep.cluster_failures > 0 {
                    res.push(format!("{} samples off the cluster variety", rep.cluster_failures));
                }
                if rep.target_failures > 0 {
                    res.push(format!("{} samples miss the target: {}", rep.target_failures, rep.first_failure.clone().unwrap_or_default()));
                }
                if !rep.cone_variable_free {
                    res.push("cone variable occurs".into());
                }
                res.extend(rep.components.iter().filter(|(_, ok)| !ok).map(|(c, _)| format!("{c} not homogeneous")));
                res.extend(rep.relations.iter().filter(|x| x.required && !x.holds).map(|x| format!("{} fails", x.relation)));
                lines.push(format!("part {part:?}: {} samples, {} failures", rep.samples, rep.target_failures));
                Claim::from_residuals(&id, r, res).with_witness(json!(rep))
            }
            Err(e) => error_claim(&id, r, e),
        });
    }
    Suite { claims, lines }
}

fn homogeneity_claim(id: &str, r: &str, eqs: &EquationSet, w: &WeightSystem) -> Claim {
    match check_homogeneous(eqs, w) {
        Ok(hs) => {
            let bad = hs
                .iter()
                .filter(|h| !h.is_homogeneous())
                .map(|h| format!("{}: weights {:?}", h.label, h.clashes))
                .collect();
            Claim::from_residuals(id, r, bad)
        }
        Err(e) => error_claim(id, r, e),
    }
}

pub(super) fn weights(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let eqs = hvariety::equations();
    if let Some(w) = &opts.weights {
        claims.push(homogeneity_claim("weights.input", "the nine generators are homogeneous", &eqs, w));
        if w.rows() == 1 {
            if let Ok(cd) = canonical_arithmetic(w) {
                lines.push(format!("c = {}, d = {}, delta = {}, sum = {}", cd.c, cd.d, cd.delta, cd.weight_sum));
            }
        }
        return Suite { claims, lines };
    }
    let m = WeightSystem::wtmat();
    claims.push(homogeneity_claim("weights.wh", "x, p weight 1, u weight 2", &eqs, &WeightSystem::standard()));
    claims.push(homogeneity_claim("weights.wtmat", "the bigrading", &eqs, &m));
    for k in 0..2 {
        claims.push(homogeneity_claim(&format!("weights.wtmat.row{}", k + 1), "one row of the bigrading", &eqs, &m.row(k)));
    }
    for (id, ops, target) in [
        ("weights.wtmat2", vec![vec![1, -2], vec![0, 1]], WeightSystem::wtmat2()),
        ("weights.wtmat3", vec![vec![0, 1], vec![1, -1]], WeightSystem::wtmat3()),
    ] {
        let r = "row operations on the bigrading";
        let mut res = Vec::new();
        match m.combine_rows(&ops) {
            Ok(c) if c == target => {}
            Ok(_) => res.push("row combination differs".into()),
            Err(e) => res.push(format!("internal error: {e}")),
        }
        let h = homogeneity_claim(id, r, &eqs, &target);
        res.extend(h.residuals);
        claims.push(Claim::from_residuals(id, r, res));
    }
    let r = "weights on H12 with p111 = 1";
    claims.push(match dictionary("h12").and_then(|d| d.apply(&eqs)) {
        Ok(h12) => homogeneity_claim("weights.5052", r, &h12, &WeightSystem::weights_5052()),
        Err(e) => error_claim("weights.5052", r, e),
    });
    let r = "weightings making H13 homogeneous";
    claims.push(match solve_weight_constraints(&eqs, &[]) {
        Ok(lat) => {
            let mut res = Vec::new();
            for (name, w) in [("wH", WeightSystem::standard()), ("wtmat row 2", m.row(1))] {
                if !lat.contains(&w).unwrap_or(false) {
                    res.push(format!("{name} not in the lattice"));
                }
            }
            for i in 0..lat.dimension() {
                let w = lat.point(&(0..lat.dimension()).map(|j| Rational::from_integer(((i == j) as i64).into())).collect::<Vec<_>>());
                match canonical_arithmetic(&w) {
                    Ok(cd) if cd.sum_identity_holds() => {}
                    Ok(cd) => res.push(format!("basis {i}: sum {} != 4d - c", cd.weight_sum)),
                    Err(e) => res.push(format!("basis {i}: {e}")),
                }
            }
            lines.push(format!("weight lattice of H13: dimension {}", lat.dimension()));
            Claim::from_residuals("weights.lattice", r, res).with_witness(json!({"dimension": lat.dimension()}))
        }
        Err(e) => error_claim("weights.lattice", r, e),
    });
    Suite { claims, lines }
}

pub(super) fn hilbert(opts: &Options) -> Suite {
    let mut claims = Vec::new();
    let mut lines = Vec::new();
    let ws = opts.weights.clone().unwrap_or_else(WeightSystem::standard);
    let q = |n: i64| Rational::from_integer(n.into());
    let r = "c = w(x11 x21 u1), d = w(u1 u2 u3), sum of weights = 4d - c, omega twist 2c - 3d";
    claims.push(match canonical_arithmetic(&ws) {
        Ok(cd) => {
            let mut res = Vec::new();
            if !cd.sum_identity_holds() {
                res.push(format!("sum {} != 4d - c", cd.weight_sum));
            }
            if opts.weights.is_none() {
                let got = [&cd.c, &cd.d, &cd.delta, &cd.weight_sum, &cd.omega_h_twist];
                if got != [&q(4), &q(6), &q(10), &q(20), &q(-10)] {
                    res.push(format!("c, d, delta, sum, twist = {got:?}"));
                }
            }
            lines.push(format!("c = {}, d = {}, delta = {}, sum = {}, omega twist {}", cd.c, cd.d, cd.delta, cd.weight_sum, cd.omega_h_twist));
            Claim::from_residuals("hilbert.canonical", r, res).with_witness(json!(cd))
        }
        Err(e) => error_claim("hilbert.canonical", r, e),
    });
    let r = "numerator of the Hilbert series from the resolution";
    claims.push(match hilbert_numerator(&ws) {
        Ok(num) => {
            let mut res = Vec::new();
            let d = num.degree().unwrap_or(0);
            if !num.is_palindromic(d) {
                res.push(format!("{num} is not palindromic"));
            }
            if num.order_at_one() < 4 {
                res.push(format!("(1-t)^4 does not divide {num}"));
            }
            if opts.weights.is_none() && num.to_string() != "1 - 6t^3 - t^4 + 12t^5 - t^6 - 6t^7 + t^10" {
                res.push(format!("Num = {num}"));
            }
            lines.push(format!("Num(t) = {num}"));
            Claim::from_residuals("hilbert.numerator", r, res).with_witness(json!(num.to_string()))
        }
        Err(e) => error_claim("hilbert.numerator", r, e),
    });
    let r = "(-K)^3 and genus of the codimension-4 Fano section";
    claims.push(match fano_invariants(&ws, opts.sections, 1) {
        Ok(inv) => {
            lines.push(format!("degree {}, h0 {}, genus {}", inv.degree, inv.h0, inv.genus));
            let mut res = Vec::new();
            if opts.weights.is_none() && opts.sections == 9 && (inv.degree != Rational::new(11.into(), 2.into()) || inv.genus != 3) {
                res.push(format!("degree {}, genus {}", inv.degree, inv.genus));
            }
            Claim::from_residuals("hilbert.fano", r, res).with_witness(json!(inv))
        }
        Err(e) => error_claim("hilbert.fano", r, e),
    });
    Suite { claims, lines }
}
