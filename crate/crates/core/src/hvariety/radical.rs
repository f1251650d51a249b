//! Radicals `R = {s : U_s y = 0 for all y}` of `J_P` at the special points.

use serde::Serialize;

use crate::coord8::{self, presentation, Hypermatrix, COORD_NAMES};
use crate::exactcore::parse_poly;
use crate::jordan::{Element, JordanPresentation};
use crate::sampling::{nonzero_rational, rational, Rng8};
use crate::{Poly, Rational};

use super::orbit::{hyperdeterminant_value, SpecialPoint};
use super::HError;

fn poly(s: &str) -> Poly {
    parse_poly(coord8::ring(), s).expect("valid literal")
}

/// Equations of the radical at a special point.
pub fn locus_equations(case: SpecialPoint) -> Vec<Poly> {
    let src: &[&str] = match case {
        SpecialPoint::Origin => &["u1", "u2", "u3"],
        SpecialPoint::P1 => &["u1", "u2", "u3", "x22*x23", "x21*x23", "x21*x22"],
        SpecialPoint::P2 => &["u1", "u2", "u3", "x23", "x11*x12 + x21*x22"],
        SpecialPoint::P3 => &["u1", "u2", "u3", "x21", "x22", "x13"],
        SpecialPoint::P4 => &COORD_NAMES,
    };
    src.iter().map(|s| poly(s)).collect()
}

/// The expected cubic form at a special point, where one is displayed.
pub fn stated_norm(case: SpecialPoint) -> Option<Poly> {
    match case {
        SpecialPoint::Origin | SpecialPoint::P1 => Some(poly("u1*u2*u3")),
        SpecialPoint::P2 => Some(poly("u3*(u1*u2 + x23^2)")),
        SpecialPoint::P3 => Some(poly("u1*u2*u3 - u3*x13^2 + u1*x21^2 + 2*x13*x21*x22 + u2*x22^2")),
        SpecialPoint::P4 => None,
    }
}

/// A random point of the radical locus.
pub fn locus_sample(case: SpecialPoint, n: usize, rng: &mut Rng8) -> Vec<Rational> {
    let zero = Rational::from_integer(0.into());
    let mut x = vec![zero.clone(); 9];
    let at = |name: &str| COORD_NAMES.iter().position(|c| *c == name).expect("coordinate");
    match case {
        SpecialPoint::Origin => {
            for v in x.iter_mut().take(6) {
                *v = rational(rng);
            }
        }
        SpecialPoint::P1 => {
            for name in ["x11", "x12", "x13"] {
                x[at(name)] = rational(rng);
            }
            // one of x21, x22, x23 nonzero, chosen in turn
            x[at(["x21", "x22", "x23"][n % 3])] = nonzero_rational(rng);
        }
        SpecialPoint::P2 => {
            let (a, x11, x21) = (rational(rng), rational(rng), rational(rng));
            x[at("x12")] = &a * &x21;
            x[at("x22")] = -(&a * &x11);
            x[at("x11")] = x11;
            x[at("x21")] = x21;
            x[at("x13")] = rational(rng);
        }
        SpecialPoint::P3 => {
            for name in ["x11", "x12", "x23"] {
                x[at(name)] = rational(rng);
            }
        }
        SpecialPoint::P4 => {}
    }
    x
}

fn element(x: &[Rational]) -> Element {
    x.iter().map(coord8::konst).collect()
}

/// Membership via `U` and via the norm/trace test, for a numeric `s`.
pub fn membership(j: &JordanPresentation, x: &[Rational]) -> Result<(bool, bool), HError> {
    let s = element(x);
    Ok((j.radical_membership(&s)?, j.norm_trace_witness(&s)?.all_zero()))
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    pub point: SpecialPoint,
    pub on_locus: usize,
    pub on_locus_members: usize,
    pub off_locus: usize,
    pub off_locus_members: usize,
    /// Samples where the two characterisations disagree.
    pub disagreements: usize,
    pub norm: String,
    /// `None` when no closed form is displayed for this point.
    pub norm_matches: Option<bool>,
}

impl RadicalReport {
    pub fn ok(&self) -> bool {
        self.on_locus_members == self.on_locus
            && self.off_locus_members == 0
            && self.disagreements == 0
            && self.norm_matches != Some(false)
    }
}

pub fn radical_locus_check(case: SpecialPoint, samples: usize, rng: &mut Rng8) -> Result<RadicalReport, HError> {
    let p = case.hypermatrix();
    let j = presentation(&p.to_polys())?;
    let locus = locus_equations(case);
    let norm = j.cubic().clone();
    let mut rep = RadicalReport {
        point: case,
        on_locus: samples,
        on_locus_members: 0,
        off_locus: samples,
        off_locus_members: 0,
        disagreements: 0,
        norm_matches: stated_norm(case).map(|n| n == norm),
        norm: norm.to_string(),
    };
    for n in 0..samples {
        let x = locus_sample(case, n, rng);
        let (u, tn) = membership(&j, &x)?;
        rep.on_locus_members += u as usize;
        rep.disagreements += (u != tn) as usize;
    }
    let zero = Rational::from_integer(0.into());
    let mut done = 0;
    while done < samples {
        let x: Vec<Rational> = (0..9).map(|_| nonzero_rational(rng)).collect();
        let pt = super::ring_point(&x, &p);
        if locus.iter().map(|f| f.evaluate(&pt)).collect::<Result<Vec<_>, _>>()?.iter().all(|v| v == &zero) {
            continue;
        }
        let (u, tn) = membership(&j, &x)?;
        rep.off_locus_members += u as usize;
        rep.disagreements += (u != tn) as usize;
        done += 1;
    }
    Ok(rep)
}

#[derive(Debug, Clone, Serialize)]
pub struct OpenOrbitReport {
    pub hypermatrices: usize,
    pub elements: usize,
    pub members: usize,
    pub disagreements: usize,
}

/// Random `P` with `D_H(P) != 0` and random nonzero `s`: none should be radical.
pub fn open_orbit_check(n_p: usize, n_s: usize, rng: &mut Rng8) -> Result<OpenOrbitReport, HError> {
    let zero = Rational::from_integer(0.into());
    let mut rep = OpenOrbitReport { hypermatrices: n_p, elements: n_p * n_s, members: 0, disagreements: 0 };
    for _ in 0..n_p {
        let p = loop {
            let p = Hypermatrix { entries: std::array::from_fn(|_| rational(rng)) };
            if hyperdeterminant_value(&p) != zero {
                break p;
            }
        };
        let j = presentation(&p.to_polys())?;
        for _ in 0..n_s {
            let x: Vec<Rational> = loop {
                let x: Vec<Rational> = (0..9).map(|_| rational(rng)).collect();
                if x.iter().any(|v| v != &zero) {
                    break x;
                }
            };
            let (u, tn) = membership(&j, &x)?;
            rep.members += u as usize;
            rep.disagreements += (u != tn) as usize;
        }
    }
    Ok(rep)
}
