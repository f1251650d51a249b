//! The cluster variety near `A3 = 1` maps into `M8`, and near
//! `A3 = 1, A1 = -1` into the cone over `S6`. Checked on sampled points,
//! plus the weight bookkeeping that makes the maps graded.

use serde::Serialize;

use crate::grading::{solve_weight_constraints, WeightLattice};
use crate::hvariety::sample_point;
use crate::sampling::Rng8;
use crate::{Poly, Rational};

use super::dictionary::{dictionary, Dictionary};
use super::{c2_equations, m8_equations, s6_equations, RelError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Part {
    /// `A3 = 1`, target `M8`.
    I,
    /// `A3 = 1`, `A1 = -1`, target the cone over `S6`.
    II,
}

impl Part {
    pub fn dictionary_name(self) -> &'static str {
        match self {
            Part::I => "c2-to-m8",
            Part::II => "c2-to-s7",
        }
    }

    fn h_constraints(self) -> Vec<(&'static str, Rational)> {
        let q = |n: i64| Rational::from_integer(n.into());
        let mut c = vec![("p121", q(0)), ("p112", q(0)), ("p211", q(0)), ("p111", q(1)), ("p122", q(-1))];
        if self == Part::II {
            c.push(("p212", q(1)));
        }
        c
    }

    fn weight_zero(self) -> Vec<&'static str> {
        match self {
            Part::I => vec!["A3"],
            Part::II => vec!["A1", "A3"],
        }
    }

    /// Weight relations the maps need, as `Σ k_i w(v_i) = 0`.
    fn needed_relations(self) -> Vec<(&'static str, Vec<(&'static str, i64)>)> {
        let mut out = vec![("w(th3) = w(lam) + w(A12)", vec![("th3", 1), ("lam", -1), ("A12", -1)])];
        if self == Part::II {
            out.push(("w(th1) = w(lam) + w(A23)", vec![("th1", 1), ("lam", -1), ("A23", -1)]));
            out.push(("w(lam) + w(th2) = w(A31)", vec![("lam", 1), ("th2", 1), ("A31", -1)]));
            out.push(("2 w(lam) = w(A2)", vec![("lam", 2), ("A2", -1)]));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    /// Whether the relation was imposed by `fixed` weights or read off the bare system.
    pub lattice: String,
    pub holds: bool,
    /// Informational checks do not affect the verdict.
    pub required: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClusterMapReport {
    pub part: Part,
    pub samples: usize,
    /// Samples that are not on the cluster variety (a sampler defect).
    pub cluster_failures: usize,
    /// Samples whose image misses some target equation.
    pub target_failures: usize,
    pub first_failure: Option<String>,
    /// The cone variable occurs in no target equation.
    pub cone_variable_free: bool,
    pub lattice_dimension: usize,
    /// Each dictionary component and whether it is homogeneous on the lattice.
    pub components: Vec<(String, bool)>,
    pub relations: Vec<RelationCheck>,
}

impl ClusterMapReport {
    pub fn ok(&self) -> bool {
        self.samples > 0
            && self.cluster_failures == 0
            && self.target_failures == 0
            && self.cone_variable_free
            && self.components.iter().all(|(_, ok)| *ok)
            && self.relations.iter().filter(|r| r.required).all(|r| r.holds)
    }
}

/// Cluster coordinates of a point of `H13` on the `C2` slice, by inverting
/// the `c2` dictionary (every image there is `±` one cluster variable).
fn cluster_point(h: &[Rational], c2: &Dictionary) -> Vec<Rational> {
    let zero = Rational::from_integer(0.into());
    let mut out = vec![zero; c2.target.len()];
    for (name, img) in &c2.images {
        let (mono, coeff) = img.terms().next().expect("nonzero image");
        let v = mono.0.iter().position(|e| *e == 1).expect("a single variable");
        out[v] = &h[c2.source.v(name).0] / coeff;
    }
    out
}

fn lattice_check(l: &WeightLattice, name: &str, rel: &[(&str, i64)], tag: &str, required: bool) -> Result<RelationCheck, RelError> {
    Ok(RelationCheck { relation: name.into(), lattice: tag.into(), holds: l.relation_holds(rel)?, required })
}

pub fn verify_cluster_map(part: Part, samples: usize, rng: &mut Rng8) -> Result<ClusterMapReport, RelError> {
    verify_cluster_map_with(part, &dictionary(part.dictionary_name())?, samples, rng)
}

pub fn verify_cluster_map_with(part: Part, dict: &Dictionary, samples: usize, rng: &mut Rng8) -> Result<ClusterMapReport, RelError> {
    let c2 = dictionary("c2")?;
    let cluster = c2_equations();
    let target = match part {
        Part::I => m8_equations(),
        Part::II => s6_equations(),
    };
    let constraints = part.h_constraints();
    let mut report = ClusterMapReport {
        part,
        samples,
        cluster_failures: 0,
        target_failures: 0,
        first_failure: None,
        cone_variable_free: true,
        lattice_dimension: 0,
        components: vec![],
        relations: vec![],
    };
    let images: Vec<(String, Poly)> = dict.images.clone();
    for _ in 0..samples {
        let pt = sample_point(rng, &constraints)?;
        let mut h = pt.as_vec();
        h.resize(c2.source.len(), Rational::from_integer(0.into()));
        let c = cluster_point(&h, &c2);
        if !cluster.failures_at(&c)?.is_empty() {
            report.cluster_failures += 1;
            continue;
        }
        let mut tv = vec![Rational::from_integer(0.into()); dict.source.len()];
        for (name, img) in &images {
            tv[dict.source.v(name).0] = img.evaluate(&c)?;
        }
        let bad = target.failures_at(&tv)?;
        if !bad.is_empty() {
            report.target_failures += 1;
            if report.first_failure.is_none() {
                report.first_failure = Some(format!("{} at cluster point {:?}", bad[0], c.iter().map(|q| q.to_string()).collect::<Vec<_>>()));
            }
        }
    }
    if part == Part::II {
        let sig0 = dict.source.v("sig0");
        report.cone_variable_free = target.generators().iter().all(|f| f.degree_in(sig0) == 0);
    }

    let zero = Rational::from_integer(0.into());
    let fixed: Vec<(&str, Rational)> = part.weight_zero().into_iter().map(|n| (n, zero.clone())).collect();
    let lat = solve_weight_constraints(&cluster, &fixed)?;
    report.lattice_dimension = lat.dimension();
    for (name, img) in &images {
        report.components.push((name.clone(), lat.poly_homogeneous(img)?));
    }
    let tag = format!("{} at weight 0", part.weight_zero().join(", "));
    for (name, rel) in part.needed_relations() {
        report.relations.push(lattice_check(&lat, name, &rel, &tag, true)?);
    }
    let free = solve_weight_constraints(&cluster, &[])?;
    report.relations.push(lattice_check(
        &free,
        "w(th12) = -w(A12) + w(A23) + w(A3) + w(A31)",
        &[("th12", 1), ("A12", 1), ("A23", -1), ("A3", -1), ("A31", -1)],
        "no weights fixed",
        true,
    )?);
    // listed with an undeclared t2; read as th2
    report.relations.push(lattice_check(
        &free,
        "w(th1) = w(A23) + w(A3) + w(A31) - w(th2)",
        &[("th1", 1), ("A23", -1), ("A3", -1), ("A31", -1), ("th2", 1)],
        "no weights fixed",
        false,
    )?);
    Ok(report)
}
