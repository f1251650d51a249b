//! The relatives of `H13`: `M8`, `S6` (with its cone `S7`), the cluster
//! variety `X_C2`, the slices `H12`, `H11`, and the coordinate dictionaries
//! between them.

mod action;
mod dictionary;
mod cluster_map;

use std::sync::OnceLock;

use thiserror::Error;

use crate::exactcore::{parse_poly, EquationSet, ExactError, PolyMatrix, Ring};
use crate::grading::GradingError;
use crate::hvariety::HError;
use crate::{Poly, QMatrix};

pub use action::{m8_action_certificate, s6_action_certificate, ActionCertificate};
pub use dictionary::{
    compose_h12_c2, dependencies, dictionary, specialize_with, verify_specialization, Dictionary, Specialization,
    SpecializationReport,
};
pub use cluster_map::{verify_cluster_map, verify_cluster_map_with, Part, ClusterMapReport, RelationCheck};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RelError {
    #[error("unknown dictionary {0:?}")]
    UnknownDictionary(String),
    #[error("{0} is used by the equations but not mapped")]
    Unmapped(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    H(#[from] HError),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

const M_NAMES: [&str; 12] = ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "w1", "w2", "w3", "y", "z"];
const S_NAMES: [&str; 11] = ["s11", "s12", "s13", "s22", "s23", "s33", "sig1", "sig2", "sig3", "t", "sig0"];
const C_NAMES: [&str; 13] = ["th12", "th23", "th31", "th1", "th2", "th3", "A12", "A23", "A31", "A1", "A2", "A3", "lam"];

/// `M8` coordinates, then `g1 = (a_ij)`, `g2 = (b_ij)` and `d1` standing for `1/det g1`.
pub fn m_ring() -> &'static Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    R.get_or_init(|| {
        let mut names: Vec<String> = M_NAMES.iter().map(|s| s.to_string()).collect();
        for g in ["a", "b"] {
            for ij in ["11", "12", "21", "22"] {
                names.push(format!("{g}{ij}"));
            }
        }
        names.push("d1".into());
        Ring::new(&names).expect("distinct names")
    })
}

/// `S6` coordinates, the cone variable `sig0`, then `g = (g_ij)`.
pub fn s_ring() -> &'static Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    R.get_or_init(|| {
        let mut names: Vec<String> = S_NAMES.iter().map(|s| s.to_string()).collect();
        for i in 1..=3 {
            for j in 1..=3 {
                names.push(format!("g{i}{j}"));
            }
        }
        Ring::new(&names).expect("distinct names")
    })
}

pub fn c_ring() -> &'static Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    R.get_or_init(|| Ring::new(&C_NAMES).expect("distinct names"))
}

pub(crate) fn p(ring: &Ring, s: &str) -> Poly {
    parse_poly(ring, s).unwrap_or_else(|e| panic!("literal {s:?}: {e}"))
}

pub(crate) fn mat(ring: &Ring, rows: &[&[&str]]) -> QMatrix {
    let rows = rows.iter().map(|r| r.iter().map(|s| p(ring, s)).collect()).collect();
    PolyMatrix::from_rows(ring, rows).expect("rectangular")
}

pub(crate) struct MParts {
    pub x1: QMatrix,
    pub x2: QMatrix,
    pub w: QMatrix,
    pub y: Poly,
    pub z: Poly,
}

pub(crate) fn m_parts() -> MParts {
    let r = m_ring();
    MParts {
        x1: mat(r, &[&["x1", "x2"], &["x3", "-x1"]]),
        x2: mat(r, &[&["x4", "x5"], &["x6", "x7"]]),
        w: mat(r, &[&["w1", "w2"], &["w3", "-w1"]]),
        y: p(r, "y"),
        z: p(r, "z"),
    }
}

fn push_matrix(out: &mut Vec<(String, Poly)>, tag: &str, m: &QMatrix) {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.push((format!("{tag}{}{}", i + 1, j + 1), m.get(i, j).clone()));
        }
    }
}

/// The four displayed matrix equations of `M8` in terms of its parts.
pub(crate) fn m8_from_parts(m: &MParts) -> Vec<(String, Poly)> {
    let mut out = vec![("yz-detX2".to_string(), &m.y * &m.z - m.x2.det().expect("square"))];
    let e = m
        .w
        .scale(&m.y)
        .sub(&m.x2.adjugate().unwrap().mul(&m.x1).unwrap().mul(&m.x2).unwrap())
        .unwrap();
    push_matrix(&mut out, "E", &e);
    let f = m.x2.mul(&m.w).unwrap().sub(&m.x1.mul(&m.x2).unwrap().scale(&m.z)).unwrap();
    push_matrix(&mut out, "F", &f);
    out.push(("detW".into(), m.w.det().unwrap() - m.z.pow(2) * m.x1.det().unwrap()));
    out
}

/// `yz = det X2`, `yW = X2^† X1 X2`, `X2 W = z X1 X2`, `det W = z^2 det X1`.
pub fn m8_equations() -> EquationSet {
    EquationSet::new(m_ring(), m8_from_parts(&m_parts())).expect("one ring")
}

pub(crate) struct SParts {
    pub s: QMatrix,
    pub sigma: Vec<Poly>,
    pub t: Poly,
}

pub(crate) fn s_parts() -> SParts {
    let r = s_ring();
    SParts {
        s: mat(r, &[&["s11", "s12", "s13"], &["s12", "s22", "s23"], &["s13", "s23", "s33"]]),
        sigma: vec![p(r, "sig1"), p(r, "sig2"), p(r, "sig3")],
        t: p(r, "t"),
    }
}

pub(crate) fn s6_from_parts(sp: &SParts) -> Vec<(String, Poly)> {
    let mut out = Vec::new();
    for (i, f) in sp.s.mul_vec(&sp.sigma).expect("3x3 times 3").into_iter().enumerate() {
        out.push((format!("Ssig{}", i + 1), f));
    }
    let adj = sp.s.adjugate().expect("square");
    for i in 0..3 {
        for j in i..3 {
            out.push((format!("adj{}{}", i + 1, j + 1), adj.get(i, j) - &sp.t * &sp.sigma[i] * &sp.sigma[j]));
        }
    }
    out
}

/// `S sigma = 0`, `S^† = t sigma sigma^T` (upper triangle).
pub fn s6_equations() -> EquationSet {
    EquationSet::new(s_ring(), s6_from_parts(&s_parts())).expect("one ring")
}

/// The nine cluster relations, three for each cyclic `(i, j, k)`.
pub fn c2_equations() -> EquationSet {
    let r = c_ring();
    let mut out = Vec::new();
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        let th = |a: usize| format!("th{a}");
        let thp = |a: usize, b: usize| format!("th{a}{b}");
        let ap = |a: usize, b: usize| format!("A{a}{b}");
        let a = |a: usize| format!("A{a}");
        let f1 = format!("{}*{} - {}*{} - {}*{}*{}", th(i), th(j), ap(i, j), thp(i, j), ap(j, k), a(k), ap(k, i));
        let f2 = format!(
            "{}*{} - {}*{}^2 - lam*{}*{} - {}*{}^2*{}",
            thp(k, i),
            thp(i, j),
            a(i),
            th(i),
            ap(j, k),
            th(i),
            a(j),
            ap(j, k),
            a(k)
        );
        let f3 = format!(
            "{}*{} - {}*{}*{} - lam*{}*{} - {}*{}*{}",
            th(i),
            thp(j, k),
            ap(i, j),
            a(j),
            th(j),
            ap(k, i),
            ap(i, j),
            a(k),
            ap(k, i),
            th(k)
        );
        for (n, f) in [(1, f1), (2, f2), (3, f3)] {
            out.push((format!("C{n}({i}{j}{k})"), p(r, &f)));
        }
    }
    EquationSet::new(r, out).expect("one ring")
}

#[cfg(test)]
mod tests;
