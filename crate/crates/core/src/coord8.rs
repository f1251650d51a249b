//! The nine-dimensional algebra `J_P` attached to a 2x2x2 hypermatrix `P`.
//!
//! Coordinates `x11, x21, x12, x22, x13, x23, u1, u2, u3` refer to the basis
//! `chi11, chi21, chi12, chi22, chi13, chi23, ups1, ups2, ups3`; the pair
//! `chi1i, chi2i` spans the Peirce space `J_jk` with `{i, j, k} = {1, 2, 3}`.

use std::sync::OnceLock;

use crate::exactcore::{PolyMatrix, Polynomial, Ring, VarId};
use crate::jordan::{Element, JordanError, JordanPresentation};
use crate::{Poly, QMatrix, Rational};

/// Variables of the coordinate ring, in canonical order.
pub const COORD_NAMES: [&str; 9] = ["x11", "x21", "x12", "x22", "x13", "x23", "u1", "u2", "u3"];
/// Hypermatrix entries in the order used by files and reports.
pub const P_NAMES: [&str; 8] = ["p111", "p211", "p121", "p221", "p112", "p212", "p122", "p222"];
/// Labels of the nine generators of the key variety.
pub const GEN_LABELS: [&str; 9] = ["G1a", "G1b", "G2a", "G2b", "G3a", "G3b", "G4", "G5", "G6"];

const NSYM: usize = 2;

/// The shared ring: coordinates, hypermatrix entries, two symbol vectors,
/// a scalar `lam`, and the entries `gk_rc` of three 2x2 matrices.
pub fn ring() -> &'static Ring {
    static RING: OnceLock<Ring> = OnceLock::new();
    RING.get_or_init(|| {
        let mut names: Vec<String> = COORD_NAMES.iter().chain(P_NAMES.iter()).map(|s| s.to_string()).collect();
        for j in 0..NSYM {
            for i in 0..9 {
                names.push(format!("s{j}_{i}"));
            }
        }
        names.push("lam".into());
        for k in 1..=3 {
            for r in 1..=2 {
                for c in 1..=2 {
                    names.push(format!("g{k}_{r}{c}"));
                }
            }
        }
        Ring::new(&names).expect("distinct names")
    })
}

pub fn var(name: &str) -> Poly {
    Polynomial::named(ring(), name)
}

pub fn int(n: i64) -> Poly {
    Polynomial::int(ring(), n)
}

pub fn zero() -> Poly {
    Polynomial::zero(ring())
}

pub fn konst(q: &Rational) -> Poly {
    Polynomial::constant(ring(), q.clone())
}

/// Index of `x_{a i}` in the coordinate vector (`a` in 1..=2, `i` in 1..=3).
pub fn xi(a: usize, i: usize) -> usize {
    2 * (i - 1) + (a - 1)
}

/// Index of `u_i` in the coordinate vector.
pub fn ui(i: usize) -> usize {
    5 + i
}

pub fn coord_vars() -> Vec<VarId> {
    COORD_NAMES.iter().map(|n| ring().v(n)).collect()
}

pub fn p_vars() -> Vec<VarId> {
    P_NAMES.iter().map(|n| ring().v(n)).collect()
}

/// The generic element: coordinates are the coordinate variables.
pub fn coords() -> Element {
    COORD_NAMES.iter().map(|n| var(n)).collect()
}

/// Position of `p_{ijk}` in [`P_NAMES`].
pub fn p_index(i: usize, j: usize, k: usize) -> usize {
    (i - 1) + 2 * (j - 1) + 4 * (k - 1)
}

/// Entries of a 2x2x2 hypermatrix, stored in [`P_NAMES`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypermatrix<T> {
    pub entries: [T; 8],
}

impl<T: Clone> Hypermatrix<T> {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.entries[p_index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.entries[p_index(i, j, k)] = v;
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Hypermatrix<U> {
        Hypermatrix { entries: std::array::from_fn(|n| f(&self.entries[n])) }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("hypermatrix: {0}")]
pub struct HypermatrixParseError(pub String);

impl std::str::FromStr for Hypermatrix<Rational> {
    type Err = HypermatrixParseError;

    /// Eight rationals separated by whitespace in [`P_NAMES`] order, or a JSON
    /// object `{"p111": "1", ...}` (missing entries are 0).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |m: String| HypermatrixParseError(m);
        let num = |s: &str| s.trim().parse::<Rational>().map_err(|_| err(format!("bad rational {s:?}")));
        let t = text.trim();
        let mut h = Hypermatrix::zero();
        if t.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(t).map_err(|e| err(e.to_string()))?;
            let obj = v.as_object().ok_or_else(|| err("expected an object".into()))?;
            for (k, val) in obj {
                let n = P_NAMES.iter().position(|p| p == k).ok_or_else(|| err(format!("unknown entry {k:?}")))?;
                h.entries[n] = match val {
                    serde_json::Value::String(s) => num(s)?,
                    serde_json::Value::Number(x) => num(&x.to_string())?,
                    other => return Err(err(format!("bad value {other}"))),
                };
            }
            return Ok(h);
        }
        let items: Vec<&str> = t.split_whitespace().collect();
        if items.len() != 8 {
            return Err(err(format!("expected 8 entries, found {}", items.len())));
        }
        for (n, s) in items.iter().enumerate() {
            h.entries[n] = num(s)?;
        }
        Ok(h)
    }
}

impl Hypermatrix<Poly> {
    /// Entries are the variables `p111, ..., p222`.
    pub fn symbolic() -> Self {
        Hypermatrix { entries: std::array::from_fn(|n| var(P_NAMES[n])) }
    }
}

impl Hypermatrix<Rational> {
    pub fn zero() -> Self {
        Hypermatrix { entries: std::array::from_fn(|_| Rational::from_integer(0.into())) }
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Hypermatrix { entries: v.map(crate::exactcore::rat) }
    }

    /// Hypermatrix with `1` at the listed positions and `0` elsewhere.
    pub fn ones_at(idx: &[(usize, usize, usize)]) -> Self {
        let mut h = Self::zero();
        for &(i, j, k) in idx {
            h.set(i, j, k, crate::exactcore::rat(1));
        }
        h
    }

    pub fn to_polys(&self) -> Hypermatrix<Poly> {
        self.map(konst)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e == &Rational::from_integer(0.into()))
    }
}

/// `D^{(k)}_{ij}` evaluated with `x_{1k}, x_{2k}` taken from `x`.
pub fn d_entry(p: &Hypermatrix<Poly>, k: usize, i: usize, j: usize, x: &[Poly]) -> Poly {
    let idx = |c: usize| match k {
        1 => p.get(c, i, j),
        2 => p.get(i, c, j),
        _ => p.get(i, j, c),
    };
    idx(1) * &x[xi(2, k)] - idx(2) * &x[xi(1, k)]
}

/// `D^{(k)}(x, y) = [[-D_12(x), D_11(y)], [-D_22(x), D_21(y)]]`; `D^{(k)}(x) = D^{(k)}(x, x)`.
pub fn d_matrix_mixed(p: &Hypermatrix<Poly>, k: usize, x: &[Poly], y: &[Poly]) -> QMatrix {
    PolyMatrix::from_rows(
        ring(),
        vec![
            vec![-d_entry(p, k, 1, 2, x), d_entry(p, k, 1, 1, y)],
            vec![-d_entry(p, k, 2, 2, x), d_entry(p, k, 2, 1, y)],
        ],
    )
    .expect("2x2")
}

pub fn d_matrix(p: &Hypermatrix<Poly>, k: usize, x: &[Poly]) -> QMatrix {
    d_matrix_mixed(p, k, x, x)
}

pub fn det2(m: &QMatrix) -> Poly {
    m.det().expect("square")
}

fn pair(x: &[Poly], i: usize) -> [Poly; 2] {
    [x[xi(1, i)].clone(), x[xi(2, i)].clone()]
}

/// The sharp map of `J_P` applied to coordinates `x`.
pub fn sharp_components(p: &Hypermatrix<Poly>, x: &[Poly]) -> Vec<Poly> {
    let u = |i: usize| &x[ui(i)];
    let d1 = d_matrix(p, 1, x);
    let d2 = d_matrix(p, 2, x);
    let d3 = d_matrix(p, 3, x);
    let mv = |m: &QMatrix, v: [Poly; 2]| m.mul_vec(&v).expect("2x2 times 2");
    let x1s: Vec<Poly> = mv(&d3, pair(x, 2)).iter().zip(pair(x, 1)).map(|(a, b)| a - u(1) * b).collect();
    let x2s: Vec<Poly> = mv(&d1, pair(x, 3)).iter().zip(pair(x, 2)).map(|(a, b)| a - u(2) * b).collect();
    let adj2 = d2.adjugate().expect("square");
    let x3s: Vec<Poly> = mv(&adj2, pair(x, 1)).iter().zip(pair(x, 3)).map(|(a, b)| -a - u(3) * b).collect();
    vec![
        x1s[0].clone(),
        x1s[1].clone(),
        x2s[0].clone(),
        x2s[1].clone(),
        x3s[0].clone(),
        x3s[1].clone(),
        u(2) * u(3) + det2(&d1),
        u(3) * u(1) + det2(&d2),
        u(1) * u(2) + det2(&d3),
    ]
}

/// `N_P(x) = (1/3) sum_k (u_k u_k# - |D^(k)(x, x#)| - |D^(k)(x#, x)|)`.
pub fn cubic_form_at(p: &Hypermatrix<Poly>, x: &[Poly]) -> Poly {
    let xs = sharp_components(p, x);
    let mut acc = zero();
    for k in 1..=3 {
        acc = acc + &x[ui(k)] * &xs[ui(k)]
            - det2(&d_matrix_mixed(p, k, x, &xs))
            - det2(&d_matrix_mixed(p, k, &xs, x));
    }
    acc.scale(&crate::exactcore::ratio(1, 3))
}

pub fn cubic_form(p: &Hypermatrix<Poly>) -> Poly {
    cubic_form_at(p, &coords())
}

/// The nine generators `G1 .. G6` of the key variety: the components of `x#`.
pub fn generators(p: &Hypermatrix<Poly>) -> Vec<Poly> {
    sharp_components(p, &coords())
}

/// The Jordan presentation of `J_P`; `p` may be symbolic or numeric.
pub fn presentation(p: &Hypermatrix<Poly>) -> Result<JordanPresentation, JordanError> {
    let r = ring();
    let syms: Vec<Vec<VarId>> = (0..NSYM).map(|j| (0..9).map(|i| r.v(&format!("s{j}_{i}"))).collect()).collect();
    let unit = (0..9).map(|i| crate::exactcore::rat(if i >= 6 { 1 } else { 0 })).collect();
    JordanPresentation::new(r, coord_vars(), unit, cubic_form(p), generators(p), syms, Some(r.v("lam")))
}

/// A presentation with a caller-supplied sharp map in place of `x#`; used
/// to check that defects in the map are detected.
pub fn presentation_with_sharp(p: &Hypermatrix<Poly>, sharp: Vec<Poly>) -> Result<JordanPresentation, JordanError> {
    let r = ring();
    let syms: Vec<Vec<VarId>> = (0..NSYM).map(|j| (0..9).map(|i| r.v(&format!("s{j}_{i}"))).collect()).collect();
    let unit = (0..9).map(|i| crate::exactcore::rat(if i >= 6 { 1 } else { 0 })).collect();
    JordanPresentation::new(r, coord_vars(), unit, cubic_form(p), sharp, syms, Some(r.v("lam")))
}

/// Indices of the basis of the Peirce space `J_ab` (unordered, `a != b`).
pub fn peirce_space(a: usize, b: usize) -> [usize; 2] {
    assert!(a != b && (1..=3).contains(&a) && (1..=3).contains(&b));
    let c = 6 - a - b;
    [xi(1, c), xi(2, c)]
}

/// Multiplication table `e_a # e_b` of the basis, each entry a coordinate vector.
#[derive(Debug, Clone)]
pub struct PeirceTable {
    pub entries: Vec<Vec<Element>>,
}

impl PeirceTable {
    pub fn product(&self, a: usize, b: usize) -> &Element {
        &self.entries[a][b]
    }

    /// The bilinear sharp product `x # y` computed from the table.
    pub fn sharp_product(&self, x: &[Poly], y: &[Poly]) -> Element {
        let mut out = vec![zero(); 9];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (o, e) in out.iter_mut().zip(&self.entries[a][b]) {
                    if !e.is_zero() {
                        *o = &*o + &c * e;
                    }
                }
            }
        }
        out
    }

    /// `x# = (1/2) x # x`.
    pub fn sharp(&self, x: &[Poly]) -> Element {
        let half = crate::exactcore::ratio(1, 2);
        self.sharp_product(x, x).iter().map(|c| c.scale(&half)).collect()
    }

    /// Representation matrix of `y -> s # y` from `J_ik` to `J_jk`, for `s` in `J_ij`.
    pub fn peirce_matrix(&self, s: &[Poly], i: usize, j: usize) -> QMatrix {
        let k = 6 - i - j;
        let src = peirce_space(i, k);
        let dst = peirce_space(j, k);
        let mut m = PolyMatrix::zeros(ring(), 2, 2);
        for (col, &e) in src.iter().enumerate() {
            let mut basis = vec![zero(); 9];
            basis[e] = int(1);
            let img = self.sharp_product(s, &basis);
            for (row, &d) in dst.iter().enumerate() {
                m.set(row, col, img[d].clone());
            }
        }
        m
    }
}

/// The multiplication table of the basis for the hypermatrix `p`.
pub fn build_peirce_table(p: &Hypermatrix<Poly>) -> PeirceTable {
    let mut t = vec![vec![vec![zero(); 9]; 9]; 9];
    let pp = |i, j, k| p.get(i, j, k).clone();
    let mut put = |a: usize, b: usize, v: Vec<(usize, Poly)>| {
        let mut e = vec![zero(); 9];
        for (idx, c) in v {
            e[idx] = &e[idx] + &c;
        }
        t[a][b] = e.clone();
        t[b][a] = e;
    };
    let c = |a, i| xi(a, i);
    // chi_a1 # chi_b2 in J_12 = span(chi13, chi23)
    put(c(1, 1), c(1, 2), vec![(c(1, 3), pp(2, 2, 1)), (c(2, 3), pp(2, 2, 2))]);
    put(c(1, 1), c(2, 2), vec![(c(1, 3), -pp(2, 1, 1)), (c(2, 3), -pp(2, 1, 2))]);
    put(c(2, 1), c(1, 2), vec![(c(1, 3), -pp(1, 2, 1)), (c(2, 3), -pp(1, 2, 2))]);
    put(c(2, 1), c(2, 2), vec![(c(1, 3), pp(1, 1, 1)), (c(2, 3), pp(1, 1, 2))]);
    // chi_a1 # chi_b3 in J_13
    put(c(1, 1), c(1, 3), vec![(c(1, 2), pp(2, 1, 2)), (c(2, 2), pp(2, 2, 2))]);
    put(c(1, 1), c(2, 3), vec![(c(1, 2), -pp(2, 1, 1)), (c(2, 2), -pp(2, 2, 1))]);
    put(c(2, 1), c(1, 3), vec![(c(1, 2), -pp(1, 1, 2)), (c(2, 2), -pp(1, 2, 2))]);
    put(c(2, 1), c(2, 3), vec![(c(1, 2), pp(1, 1, 1)), (c(2, 2), pp(1, 2, 1))]);
    // chi_a2 # chi_b3 in J_23
    put(c(1, 2), c(1, 3), vec![(c(1, 1), pp(1, 2, 2)), (c(2, 1), pp(2, 2, 2))]);
    put(c(1, 2), c(2, 3), vec![(c(1, 1), -pp(1, 2, 1)), (c(2, 1), -pp(2, 2, 1))]);
    put(c(2, 2), c(1, 3), vec![(c(1, 1), -pp(1, 1, 2)), (c(2, 1), -pp(2, 1, 2))]);
    put(c(2, 2), c(2, 3), vec![(c(1, 1), pp(1, 1, 1)), (c(2, 1), pp(2, 1, 1))]);
    // chi_ai # chi_bi in the span of ups_i
    let two = int(2);
    let m = |a: Poly| a;
    put(c(1, 1), c(1, 1), vec![(ui(1), &two * m(pp(2, 1, 1) * pp(2, 2, 2) - pp(2, 1, 2) * pp(2, 2, 1)))]);
    put(
        c(1, 1),
        c(2, 1),
        vec![(ui(1), pp(1, 2, 1) * pp(2, 1, 2) - pp(1, 2, 2) * pp(2, 1, 1) + pp(1, 1, 2) * pp(2, 2, 1) - pp(1, 1, 1) * pp(2, 2, 2))],
    );
    put(c(2, 1), c(2, 1), vec![(ui(1), &two * (pp(1, 1, 1) * pp(1, 2, 2) - pp(1, 1, 2) * pp(1, 2, 1)))]);
    put(c(1, 2), c(1, 2), vec![(ui(2), &two * (pp(1, 2, 1) * pp(2, 2, 2) - pp(1, 2, 2) * pp(2, 2, 1)))]);
    put(
        c(1, 2),
        c(2, 2),
        vec![(ui(2), pp(1, 2, 2) * pp(2, 1, 1) - pp(1, 2, 1) * pp(2, 1, 2) + pp(1, 1, 2) * pp(2, 2, 1) - pp(1, 1, 1) * pp(2, 2, 2))],
    );
    put(c(2, 2), c(2, 2), vec![(ui(2), &two * (pp(1, 1, 1) * pp(2, 1, 2) - pp(1, 1, 2) * pp(2, 1, 1)))]);
    put(c(1, 3), c(1, 3), vec![(ui(3), &two * (pp(1, 1, 2) * pp(2, 2, 2) - pp(1, 2, 2) * pp(2, 1, 2)))]);
    put(
        c(1, 3),
        c(2, 3),
        vec![(ui(3), pp(1, 2, 2) * pp(2, 1, 1) + pp(1, 2, 1) * pp(2, 1, 2) - pp(1, 1, 2) * pp(2, 2, 1) - pp(1, 1, 1) * pp(2, 2, 2))],
    );
    put(c(2, 3), c(2, 3), vec![(ui(3), &two * (pp(1, 1, 1) * pp(2, 2, 1) - pp(1, 2, 1) * pp(2, 1, 1)))]);
    // idempotents
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                put(ui(i), ui(j), vec![(ui(6 - i - j), int(1))]);
            }
        }
        for a in 1..=2 {
            put(ui(i), c(a, i), vec![(c(a, i), int(-1))]);
        }
    }
    PeirceTable { entries: t }
}

/// A symbolic element of the Peirce space `J_ab` with coefficients from symbol vector `sym`.
pub fn symbolic_in_space(a: usize, b: usize, sym: usize) -> Element {
    let mut e = vec![zero(); 9];
    for (n, idx) in peirce_space(a, b).into_iter().enumerate() {
        e[idx] = var(&format!("s{sym}_{n}"));
    }
    e
}

#[cfg(test)]
mod tests;

/// A named polynomial that should vanish.
pub type Residual = (String, Poly);

fn nonzero(items: impl IntoIterator<Item = (String, Poly)>) -> Vec<Residual> {
    items.into_iter().filter(|(_, r)| !r.is_zero()).collect()
}

const ORDERED_TRIPLES: [(usize, usize, usize); 6] = [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)];

/// `s # (s # t) = -S(s) t` for symbolic `s` in `J_ij`, `t` in `J_jk`.
pub fn verify_xxy(p: &Hypermatrix<Poly>) -> Result<Vec<Residual>, JordanError> {
    let t = build_peirce_table(p);
    let j = presentation(p)?;
    let mut out = Vec::new();
    for (a, b, c) in ORDERED_TRIPLES {
        let s = symbolic_in_space(a, b, 0);
        let y = symbolic_in_space(b, c, 1);
        let lhs = t.sharp_product(&s, &t.sharp_product(&s, &y));
        let sp = j.trace(&t.sharp(&s))?;
        for (n, (l, yy)) in lhs.iter().zip(&y).enumerate() {
            out.push((format!("xxy({a}{b}{c})[{}]", COORD_NAMES[n]), l + &sp * yy));
        }
    }
    Ok(nonzero(out))
}

/// `P_ij P_ji = -S(s) E` for symbolic `s` in `J_ij`, every ordered pair.
pub fn verify_pij_pji(p: &Hypermatrix<Poly>) -> Result<Vec<Residual>, JordanError> {
    let t = build_peirce_table(p);
    let j = presentation(p)?;
    let mut out = Vec::new();
    for (a, b, _) in ORDERED_TRIPLES {
        let s = symbolic_in_space(a, b, 0);
        let prod = t.peirce_matrix(&s, a, b).mul(&t.peirce_matrix(&s, b, a)).expect("2x2");
        let sp = j.trace(&t.sharp(&s))?;
        let target = PolyMatrix::identity(ring(), 2).scale(&-sp);
        let diff = prod.sub(&target).expect("2x2");
        for (n, e) in diff.entries().iter().enumerate() {
            out.push((format!("P{a}{b}P{b}{a}[{n}]"), e.clone()));
        }
    }
    Ok(nonzero(out))
}

/// The normalisations `det P_13 = S`, `det P_23 = S`, `P_31 = -adj P_13`,
/// `P_32 = -adj P_23`, and the explicit matrices for the basis vectors.
pub fn verify_peirce_normalisation(p: &Hypermatrix<Poly>) -> Result<Vec<Residual>, JordanError> {
    let t = build_peirce_table(p);
    let j = presentation(p)?;
    let mut out = Vec::new();
    for (a, b) in [(1, 3), (2, 3)] {
        let s = symbolic_in_space(a, b, 0);
        let pab = t.peirce_matrix(&s, a, b);
        let sp = j.trace(&t.sharp(&s))?;
        out.push((format!("det P{a}{b} - S"), det2(&pab) - sp));
        let pba = t.peirce_matrix(&s, b, a);
        let adj = pab.adjugate().expect("2x2");
        for (n, e) in pba.add(&adj).expect("2x2").entries().iter().enumerate() {
            out.push((format!("P{b}{a} + adj P{a}{b} [{n}]"), e.clone()));
        }
    }
    let basis = |i: usize| {
        let mut e = vec![zero(); 9];
        e[i] = int(1);
        e
    };
    let pp = |i, j, k| p.get(i, j, k).clone();
    let expected = [
        (xi(1, 1), 3, 2, [pp(2, 2, 1), -pp(2, 1, 1), pp(2, 2, 2), -pp(2, 1, 2)]),
        (xi(2, 1), 3, 2, [-pp(1, 2, 1), pp(1, 1, 1), -pp(1, 2, 2), pp(1, 1, 2)]),
        (xi(1, 2), 3, 1, [pp(2, 2, 1), -pp(1, 2, 1), pp(2, 2, 2), -pp(1, 2, 2)]),
        (xi(2, 2), 3, 1, [-pp(2, 1, 1), pp(1, 1, 1), -pp(2, 1, 2), pp(1, 1, 2)]),
    ];
    for (e, a, b, m) in expected {
        let got = t.peirce_matrix(&basis(e), a, b);
        for (n, (g, w)) in got.entries().iter().zip(m).enumerate() {
            out.push((format!("P{a}{b}^{}[{n}]", COORD_NAMES[e]), g - w));
        }
    }
    Ok(nonzero(out))
}

/// Components of the table's quadratic map minus the closed-form sharp map.
pub fn verify_table_matches_sharp(p: &Hypermatrix<Poly>) -> Vec<Residual> {
    let t = build_peirce_table(p);
    let x = coords();
    nonzero(
        t.sharp(&x)
            .into_iter()
            .zip(sharp_components(p, &x))
            .enumerate()
            .map(|(n, (a, b))| (format!("sharp[{}]", COORD_NAMES[n]), a - b)),
    )
}
