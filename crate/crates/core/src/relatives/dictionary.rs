use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coord8::ring as h_ring;
use crate::exactcore::linalg::nullspace;
use crate::exactcore::span::coefficient_matrix;
use crate::exactcore::{span_compare, EquationSet, Polynomial, Ring, SpanRelation};
use crate::hvariety::equations as h_equations;
use crate::{Poly, Rational};

use super::{c2_equations, c_ring, m8_equations, m_ring, p, s6_equations, s_ring, RelError};

/// A ring map: some source variables fixed to constants, others sent to
/// polynomials in the target ring. Variables not listed must not occur.
#[derive(Debug, Clone)]
pub struct Dictionary {
    pub name: String,
    pub source: Ring,
    pub target: Ring,
    pub fixed: Vec<(String, Rational)>,
    pub images: Vec<(String, Poly)>,
}

impl Dictionary {
    pub fn new(name: &str, source: &Ring, target: &Ring, fixed: &[(&str, i64)], images: &[(&str, &str)]) -> Self {
        Dictionary {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            fixed: fixed.iter().map(|(n, v)| (n.to_string(), Rational::from_integer((*v).into()))).collect(),
            images: images.iter().map(|(n, e)| (n.to_string(), p(target, e))).collect(),
        }
    }

    /// Replace the image of one source variable.
    pub fn with_image(mut self, var: &str, expr: &str) -> Self {
        let poly = p(&self.target, expr);
        match self.images.iter_mut().find(|(n, _)| n == var) {
            Some(slot) => slot.1 = poly,
            None => self.images.push((var.into(), poly)),
        }
        self
    }

    fn image_vector(&self) -> (Vec<Poly>, Vec<bool>) {
        let mut out = vec![Polynomial::zero(&self.target); self.source.len()];
        let mut mapped = vec![false; self.source.len()];
        for (n, v) in &self.fixed {
            let i = self.source.v(n).0;
            out[i] = Polynomial::constant(&self.target, v.clone());
            mapped[i] = true;
        }
        for (n, e) in &self.images {
            let i = self.source.v(n).0;
            out[i] = e.clone();
            mapped[i] = true;
        }
        (out, mapped)
    }

    pub fn apply_poly(&self, f: &Poly) -> Result<Poly, RelError> {
        let (images, mapped) = self.image_vector();
        if let Some(v) = f.support().into_iter().find(|v| !mapped[v.0]) {
            return Err(RelError::Unmapped(self.source.name(v).into()));
        }
        Ok(f.map_into(&self.target, &images)?)
    }

    pub fn apply(&self, eqs: &EquationSet) -> Result<EquationSet, RelError> {
        let mapped = eqs.iter().map(|(l, f)| Ok((l.to_string(), self.apply_poly(f)?))).collect::<Result<Vec<_>, RelError>>()?;
        Ok(EquationSet::new(&self.target, mapped)?)
    }

    pub fn image(&self, var: &str) -> Option<&Poly> {
        self.images.iter().find(|(n, _)| n == var).map(|(_, e)| e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Specialization {
    M8,
    S6,
    C2,
    H12,
    H11,
}

impl Specialization {
    pub const ALL: [Specialization; 5] = [Self::M8, Self::S6, Self::C2, Self::H12, Self::H11];

    pub fn name(self) -> &'static str {
        match self {
            Self::M8 => "m8",
            Self::S6 => "s6",
            Self::C2 => "c2",
            Self::H12 => "h12",
            Self::H11 => "h11",
        }
    }

    fn target(self) -> Option<EquationSet> {
        match self {
            Self::M8 => Some(m8_equations()),
            Self::S6 => Some(s6_equations()),
            Self::C2 => Some(c2_equations()),
            Self::H12 | Self::H11 => None,
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Specialization {
    type Err = RelError;
    fn from_str(s: &str) -> Result<Self, RelError> {
        Self::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| RelError::UnknownDictionary(s.into()))
    }
}

const COORDS: [&str; 9] = ["x11", "x21", "x12", "x22", "x13", "x23", "u1", "u2", "u3"];
const PS: [&str; 8] = ["p111", "p211", "p121", "p221", "p112", "p212", "p122", "p222"];

fn identity_on_h(except: &[&str]) -> Vec<(&'static str, &'static str)> {
    COORDS.iter().chain(PS.iter()).filter(|n| !except.contains(n)).map(|n| (*n, *n)).collect()
}

/// The coordinate changes into the relatives. `c2-to-m8` and `c2-to-s7` act
/// on the cluster ring after `A3 = 1` (and `A1 = -1` for the second).
pub fn dictionary(name: &str) -> Result<Dictionary, RelError> {
    let h = h_ring();
    let d = match name {
        "m8" => Dictionary::new(
            "m8",
            h,
            m_ring(),
            &[("p221", -1), ("p222", 0), ("p211", 0), ("p212", 1)],
            &[
                ("p111", "-x2"),
                ("p112", "x1"),
                ("p121", "x1"),
                ("p122", "x3"),
                ("x11", "w1"),
                ("x21", "z"),
                ("x12", "x5"),
                ("x22", "x7"),
                ("x13", "x4"),
                ("x23", "x6"),
                ("u1", "-y"),
                ("u2", "-w3"),
                ("u3", "-w2"),
            ],
        ),
        "s6" => Dictionary::new(
            "s6",
            h,
            s_ring(),
            &[("p221", 1), ("p212", 1), ("p122", 1), ("p222", 0), ("p211", 0), ("p121", 0), ("p112", 0)],
            &[
                ("p111", "-t"),
                ("u1", "s11"),
                ("x13", "s12"),
                ("x12", "s13"),
                ("u2", "s22"),
                ("x11", "s23"),
                ("u3", "s33"),
                ("x21", "sig1"),
                ("x22", "sig2"),
                ("x23", "sig3"),
            ],
        ),
        "c2" => Dictionary::new(
            "c2",
            h,
            c_ring(),
            &[("p121", 0), ("p112", 0), ("p211", 0), ("p111", 1)],
            &[
                ("u1", "th12"),
                ("u2", "th23"),
                ("u3", "th31"),
                ("x11", "A12"),
                ("x21", "th3"),
                ("x12", "A23"),
                ("x22", "th1"),
                ("x13", "A31"),
                ("x23", "th2"),
                ("p212", "-A1"),
                ("p221", "-A2"),
                ("p122", "-A3"),
                ("p222", "lam"),
            ],
        ),
        "h12" => Dictionary::new("h12", h, h, &[("p111", 1)], &identity_on_h(&["p111"])),
        "h11" => Dictionary::new("h11", h, h, &[("p111", 1), ("p121", 1)], &identity_on_h(&["p111", "p121"])),
        "c2-to-m8" => Dictionary::new(
            "c2-to-m8",
            m_ring(),
            c_ring(),
            &[],
            &[
                ("x1", "1/2*lam"),
                ("x2", "A2"),
                ("x3", "-A1"),
                ("x4", "th1"),
                ("x5", "A31"),
                ("x6", "A23"),
                ("x7", "th2"),
                ("w1", "th3 + 1/2*lam*A12"),
                ("w2", "th23"),
                ("w3", "-th31"),
                ("y", "th12"),
                ("z", "A12"),
            ],
        ),
        "c2-to-s7" => Dictionary::new(
            "c2-to-s7",
            s_ring(),
            c_ring(),
            &[],
            &[
                ("s11", "th12"),
                ("s12", "-th1 + 1/2*lam*A23"),
                ("s13", "A31 - 1/2*lam*th2"),
                ("s22", "-th31"),
                ("s23", "th3 + 1/2*lam*A12"),
                ("s33", "-th23"),
                ("sig1", "A12"),
                ("sig2", "th2"),
                ("sig3", "A23"),
                ("t", "-1/4*lam^2 - A2"),
                ("sig0", "lam"),
            ],
        ),
        other => return Err(RelError::UnknownDictionary(other.into())),
    };
    Ok(d)
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecializationReport {
    pub name: String,
    /// Specialized generators, displayed.
    pub specialized: Vec<String>,
    pub target_len: Option<usize>,
    pub relation: Option<SpanRelation>,
    pub rank_specialized: usize,
    pub rank_target: Option<usize>,
    /// Labels on either side that the other span misses.
    pub missing: Vec<String>,
    /// Linear relations among the target generators.
    pub target_dependencies: Vec<String>,
    #[serde(skip)]
    pub equations: Option<EquationSet>,
}

impl SpecializationReport {
    pub fn ok(&self) -> bool {
        matches!(self.relation, None | Some(SpanRelation::Equal))
    }
}

/// Linear dependencies among the generators, as `Σ c_i label_i = 0`.
pub fn dependencies(eqs: &EquationSet) -> Vec<String> {
    let rows = coefficient_matrix(&[eqs.generators()]).remove(0);
    let width = rows.first().map_or(0, Vec::len);
    let transposed: Vec<Vec<Rational>> = (0..width).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
    nullspace(&transposed, rows.len())
        .into_iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .zip(eqs.labels())
                .filter(|(c, _)| **c != Rational::from_integer(0.into()))
                .map(|(c, l)| format!("({c})*{l}"))
                .collect();
            format!("{} = 0", terms.join(" + "))
        })
        .collect()
}

pub fn specialize_with(which: Specialization, dict: &Dictionary) -> Result<SpecializationReport, RelError> {
    let spec = dict.apply(&h_equations())?;
    let mut report = SpecializationReport {
        name: which.name().into(),
        specialized: spec.generators().iter().map(|f| f.to_string()).collect(),
        target_len: None,
        relation: None,
        rank_specialized: crate::exactcore::span_rank(spec.generators()),
        rank_target: None,
        missing: vec![],
        target_dependencies: vec![],
        equations: None,
    };
    if let Some(target) = which.target() {
        let cmp = span_compare(spec.generators(), target.generators())?;
        report.target_len = Some(target.len());
        report.relation = Some(cmp.relation);
        report.rank_target = Some(cmp.rank_b);
        for (i, c) in cmp.a_in_b.iter().enumerate() {
            if c.is_none() {
                report.missing.push(spec.labels()[i].clone());
            }
        }
        for (i, c) in cmp.b_in_a.iter().enumerate() {
            if c.is_none() {
                report.missing.push(target.labels()[i].clone());
            }
        }
        report.target_dependencies = dependencies(&target);
    }
    report.equations = Some(spec);
    Ok(report)
}

/// Fix the parameters, map through the dictionary, compare spans with the
/// target's own equations.
pub fn verify_specialization(which: Specialization) -> Result<SpecializationReport, RelError> {
    specialize_with(which, &dictionary(which.name())?)
}

/// `H12` specialized by `p121 = p112 = p211 = 0` then renamed, against the
/// direct `C2` specialization of `H13`. Returns whether the generator lists agree.
pub fn compose_h12_c2() -> Result<bool, RelError> {
    let h12 = dictionary("h12")?.apply(&h_equations())?;
    let mut second = dictionary("c2")?;
    second.fixed.retain(|(n, _)| n != "p111");
    let via = second.apply(&h12)?;
    let direct = dictionary("c2")?.apply(&h_equations())?;
    Ok(via.generators() == direct.generators() && span_compare(via.generators(), c2_equations().generators())?.relation == SpanRelation::Equal)
}
