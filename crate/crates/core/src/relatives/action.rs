//! Covariance of the `M8` and `S6` equations under their group actions,
//! certified with symbolic group elements.

use serde::Serialize;

use crate::exactcore::{Polynomial, VarId};
use crate::{Poly, QMatrix};

use super::{m8_from_parts, m_parts, m_ring, mat, p, s6_from_parts, s_parts, s_ring, MParts, SParts};

#[derive(Debug, Clone, Serialize)]
pub struct ActionCertificate {
    pub variety: String,
    /// Generator label and whether the transformed generator equals the
    /// expected multiple of the original ones.
    pub generators: Vec<(String, bool)>,
}

impl ActionCertificate {
    pub fn ok(&self) -> bool {
        !self.generators.is_empty() && self.generators.iter().all(|(_, ok)| *ok)
    }
}

/// Clear `d1 = 1/det` from `f`: multiply through by `det^m` and replace every
/// `d1^k det^m` by `det^(m-k)`.
fn localize(f: &Poly, d1: VarId, det: &Poly) -> Poly {
    let m = f.degree_in(d1);
    let ring = f.ring();
    let mut out = Polynomial::zero(ring);
    for (mono, c) in f.terms() {
        let k = mono.0[d1.0];
        let mut rest = mono.clone();
        rest.0[d1.0] = 0;
        let term = Polynomial::from_terms(ring, [(rest, c.clone())]);
        out = out + term * det.pow((m - k) as u32);
    }
    out
}

fn entries(m: &QMatrix) -> Vec<Poly> {
    m.entries().to_vec()
}

pub fn m8_action_certificate() -> ActionCertificate {
    let r = m_ring();
    let g1 = mat(r, &[&["a11", "a12"], &["a21", "a22"]]);
    let g2 = mat(r, &[&["b11", "b12"], &["b21", "b22"]]);
    let (dg1, dg2) = (g1.det().unwrap(), g2.det().unwrap());
    let (a1, a2) = (g1.adjugate().unwrap(), g2.adjugate().unwrap());
    let d1 = r.v("d1");
    let m = m_parts();
    let moved = MParts {
        x1: g1.mul(&m.x1).unwrap().mul(&a1).unwrap(),
        x2: g1.mul(&m.x2).unwrap().mul(&a2).unwrap(),
        w: g2.mul(&m.w).unwrap().mul(&a2).unwrap(),
        y: dg1.pow(2) * &m.y,
        z: &dg2 * p(r, "d1") * &m.z,
    };
    let after = m8_from_parts(&moved);
    let before = m8_from_parts(&m);

    // expected images, in the generator order of m8_from_parts
    let block = |start: usize| {
        QMatrix::from_rows(r, vec![
            vec![before[start].1.clone(), before[start + 1].1.clone()],
            vec![before[start + 2].1.clone(), before[start + 3].1.clone()],
        ])
        .unwrap()
    };
    let e = g2.mul(&block(1)).unwrap().mul(&a2).unwrap().scale(&dg1.pow(2));
    let f = g1.mul(&block(5)).unwrap().mul(&a2).unwrap().scale(&dg2);
    let mut expected = vec![&dg1 * &dg2 * &before[0].1];
    expected.extend(entries(&e));
    expected.extend(entries(&f));
    expected.push(dg2.pow(2) * &before[9].1);

    let generators = after
        .iter()
        .zip(&expected)
        .map(|((label, a), b)| (label.clone(), localize(&(a - b), d1, &dg1).is_zero()))
        .collect();
    ActionCertificate { variety: "M8".into(), generators }
}

pub fn s6_action_certificate() -> ActionCertificate {
    let r = s_ring();
    let g = mat(r, &[&["g11", "g12", "g13"], &["g21", "g22", "g23"], &["g31", "g32", "g33"]]);
    let dg = g.det().unwrap();
    let gt_adj = g.transpose().adjugate().unwrap();
    let g_adj = g.adjugate().unwrap();
    let s = s_parts();
    let moved = SParts {
        s: g.mul(&s.s).unwrap().mul(&g.transpose()).unwrap(),
        sigma: gt_adj.mul_vec(&s.sigma).unwrap(),
        t: s.t.clone(),
    };
    let after = s6_from_parts(&moved);
    let before = s6_from_parts(&s);

    let s_sigma: Vec<Poly> = before[..3].iter().map(|(_, f)| f.clone()).collect();
    let mut expected: Vec<Poly> = g.mul_vec(&s_sigma).unwrap().into_iter().map(|f| &dg * f).collect();
    let sigma_outer = QMatrix::from_rows(
        r,
        (0..3).map(|i| (0..3).map(|j| &s.sigma[i] * &s.sigma[j]).collect()).collect(),
    )
    .unwrap();
    let n = s.s.adjugate().unwrap().sub(&sigma_outer.scale(&s.t)).unwrap();
    let moved_n = gt_adj.mul(&n).unwrap().mul(&g_adj).unwrap();
    for i in 0..3 {
        for j in i..3 {
            expected.push(moved_n.get(i, j).clone());
        }
    }
    let generators = after
        .iter()
        .zip(&expected)
        .map(|((label, a), b)| (label.clone(), (a - b).is_zero()))
        .collect();
    ActionCertificate { variety: "S6".into(), generators }
}
