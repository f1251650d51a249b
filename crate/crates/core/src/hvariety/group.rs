//! The action of `(GL2)^3 x| S3` on the 17 coordinates, as ring substitutions.
//!
//! A factor `g_k` acts by `x_k -> g_k x_k`, `u_i -> det(g_k) u_i` for `i != k`,
//! and by `g_k` on the `k`-th index of `p_{ijk}`. A permutation `pi` sends
//! `u_m, x_m` to `u_{pi(m)}, x_{pi(m)}` and moves index slot `m` of `p` to slot
//! `pi(m)`; it is applied after the linear part.

use crate::coord8::{self, generators, p_index, ring, ui, xi, Hypermatrix, Residual, GEN_LABELS, P_NAMES};
use crate::exactcore::{span_compare, PolyMatrix, SpanComparison};
use crate::{Poly, QMatrix, Rational};

use super::orbit::hyperdeterminant;
use crate::sampling::{int_in, Rng8};
use super::HError;

/// A permutation of `{1, 2, 3}` stored as its images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([1, 2, 3]);
    pub const ALL: [Perm3; 6] =
        [Perm3([1, 2, 3]), Perm3([2, 1, 3]), Perm3([1, 3, 2]), Perm3([3, 2, 1]), Perm3([2, 3, 1]), Perm3([3, 1, 2])];

    pub fn apply(&self, m: usize) -> usize {
        self.0[m - 1]
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0; 3];
        for m in 1..=3 {
            inv[self.apply(m) - 1] = m;
        }
        Perm3(inv)
    }

    /// Cycle notation, e.g. `(123)`, `(12)`, `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = [false; 3];
        let mut out = String::new();
        for s in 1..=3 {
            if seen[s - 1] || self.apply(s) == s {
                continue;
            }
            out.push('(');
            let mut m = s;
            while !seen[m - 1] {
                seen[m - 1] = true;
                out.push_str(&m.to_string());
                m = self.apply(m);
            }
            out.push(')');
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    pub g: [QMatrix; 3],
    pub perm: Perm3,
}

fn mat(entries: [[Poly; 2]; 2]) -> QMatrix {
    let [a, b] = entries;
    PolyMatrix::from_rows(ring(), vec![a.to_vec(), b.to_vec()]).expect("2x2")
}

impl GroupElement {
    pub fn identity() -> Self {
        let id = || PolyMatrix::identity(ring(), 2);
        GroupElement { g: [id(), id(), id()], perm: Perm3::ID }
    }

    /// Only the `k`-th factor, with entries the variables `gk_11, gk_12, gk_21, gk_22`.
    pub fn symbolic_factor(k: usize) -> Self {
        let v = |r: usize, c: usize| coord8::var(&format!("g{k}_{r}{c}"));
        let mut e = Self::identity();
        e.g[k - 1] = mat([[v(1, 1), v(1, 2)], [v(2, 1), v(2, 2)]]);
        e
    }

    pub fn permutation(perm: Perm3) -> Self {
        GroupElement { perm, ..Self::identity() }
    }

    /// Rational factors; fails if one of them is singular.
    pub fn rational(g: [[[Rational; 2]; 2]; 3], perm: Perm3) -> Result<Self, HError> {
        let mut out = Self::permutation(perm);
        for (k, m) in g.iter().enumerate() {
            if &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] == Rational::from_integer(0.into()) {
                return Err(HError::SingularGroupElement(k + 1));
            }
            out.g[k] = mat([[coord8::konst(&m[0][0]), coord8::konst(&m[0][1])], [coord8::konst(&m[1][0]), coord8::konst(&m[1][1])]]);
        }
        Ok(out)
    }

    /// Random integer factors with entries in `-3..=3` and a random permutation.
    pub fn random(rng: &mut Rng8) -> Self {
        let mut g: [[[Rational; 2]; 2]; 3] = Default::default();
        for m in g.iter_mut() {
            loop {
                for row in m.iter_mut() {
                    for e in row.iter_mut() {
                        *e = Rational::from_integer(int_in(rng, -3, 3).into());
                    }
                }
                if &m[0][0] * &m[1][1] != &m[0][1] * &m[1][0] {
                    break;
                }
            }
        }
        let perm = Perm3::ALL[int_in(rng, 0, 5) as usize];
        Self::rational(g, perm).expect("nonsingular by construction")
    }

    /// The element `(s, s, s)` with `s` the antidiagonal swap.
    pub fn swap_all() -> Self {
        let s = || mat([[coord8::int(0), coord8::int(1)], [coord8::int(1), coord8::int(0)]]);
        GroupElement { g: [s(), s(), s()], perm: Perm3::ID }
    }

    pub fn dets(&self) -> [Poly; 3] {
        std::array::from_fn(|k| self.g[k].det().expect("2x2"))
    }

    /// Images of every ring variable; spare symbols are fixed.
    pub fn substitution(&self) -> Vec<Poly> {
        let r = ring();
        let mut img: Vec<Poly> = r.vars().map(|v| Poly::var(r, v)).collect();
        let x = coord8::coords();
        let p = Hypermatrix::symbolic();
        let d = self.dets();
        let pi = |m: usize| self.perm.apply(m);
        // linear part
        let mut lin = img.clone();
        for k in 1..=3 {
            let gx = self.g[k - 1].mul_vec(&[x[xi(1, k)].clone(), x[xi(2, k)].clone()]).expect("2x2");
            lin[xi(1, k)] = gx[0].clone();
            lin[xi(2, k)] = gx[1].clone();
            let others: Poly = (1..=3).filter(|&j| j != k).map(|j| d[j - 1].clone()).fold(coord8::int(1), |a, b| a * b);
            lin[ui(k)] = &others * &x[ui(k)];
        }
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    let mut acc = coord8::zero();
                    for a in 1..=2 {
                        for b in 1..=2 {
                            for c in 1..=2 {
                                let coeff =
                                    self.g[0].get(i - 1, a - 1) * self.g[1].get(j - 1, b - 1) * self.g[2].get(k - 1, c - 1);
                                if !coeff.is_zero() {
                                    acc = acc + coeff * p.get(a, b, c);
                                }
                            }
                        }
                    }
                    lin[9 + p_index(i, j, k)] = acc;
                }
            }
        }
        // permutation part, then compose
        let mut perm_img = img.clone();
        for m in 1..=3 {
            perm_img[ui(m)] = x[ui(pi(m))].clone();
            for a in 1..=2 {
                perm_img[xi(a, m)] = x[xi(a, pi(m))].clone();
            }
        }
        for (n, name) in P_NAMES.iter().enumerate() {
            let idx: Vec<usize> = name[1..].bytes().map(|b| (b - b'0') as usize).collect();
            let mut out = [0usize; 3];
            for m in 1..=3 {
                out[pi(m) - 1] = idx[m - 1];
            }
            perm_img[9 + n] = p.get(out[0], out[1], out[2]).clone();
        }
        for n in 0..17 {
            img[n] = lin[n].map_into(r, &perm_img).expect("one ring");
        }
        img
    }

    pub fn apply_poly(&self, f: &Poly) -> Poly {
        f.map_into(ring(), &self.substitution()).expect("one ring")
    }

    pub fn apply_all(&self, fs: &[Poly]) -> Vec<Poly> {
        let img = self.substitution();
        fs.iter().map(|f| f.map_into(ring(), &img).expect("one ring")).collect()
    }

    /// Move a rational point: coordinates and hypermatrix entries.
    pub fn apply_point(&self, x: &[Rational], p: &Hypermatrix<Rational>) -> Result<(Vec<Rational>, Hypermatrix<Rational>), HError> {
        let pt = super::ring_point(x, p);
        let img = self.substitution();
        let vals: Vec<Rational> = img[..17].iter().map(|f| f.evaluate(&pt)).collect::<Result<_, _>>()?;
        Ok((vals[..9].to_vec(), Hypermatrix { entries: std::array::from_fn(|n| vals[9 + n].clone()) }))
    }

    pub fn apply_hypermatrix(&self, p: &Hypermatrix<Rational>) -> Result<Hypermatrix<Rational>, HError> {
        let zero = vec![Rational::from_integer(0.into()); 9];
        Ok(self.apply_point(&zero, p)?.1)
    }
}

/// `G o phi` minus the expected image, for the `k`-th factor with symbolic
/// entries: `G_k -> g_k G_k`, the `u_k#` generator gets `det^2`, all others `det`.
pub fn rule_certificate(k: usize) -> Vec<Residual> {
    let g = GroupElement::symbolic_factor(k);
    let det = g.dets()[k - 1].clone();
    let gens = generators(&Hypermatrix::symbolic());
    let moved = g.apply_all(&gens);
    let mut expected: Vec<Poly> = gens.iter().map(|f| &det * f).collect();
    let pair = [gens[2 * (k - 1)].clone(), gens[2 * (k - 1) + 1].clone()];
    let gp = g.g[k - 1].mul_vec(&pair).expect("2x2");
    expected[2 * (k - 1)] = gp[0].clone();
    expected[2 * (k - 1) + 1] = gp[1].clone();
    expected[5 + k] = &det * &det * &gens[5 + k];
    moved
        .into_iter()
        .zip(expected)
        .enumerate()
        .map(|(n, (m, e))| (format!("rule{k}:{}", GEN_LABELS[n]), m - e))
        .filter(|(_, r)| !r.is_zero())
        .collect()
}

/// Span comparison between the generators and their image under `g`.
pub fn span_certificate(g: &GroupElement) -> SpanComparison<Rational> {
    let gens = generators(&Hypermatrix::symbolic());
    let moved = g.apply_all(&gens);
    span_compare(&gens, &moved).expect("one ring")
}

/// Exponent `e` with `D_H o phi = det(g_k)^e D_H` for the symbolic `k`-th factor.
pub fn hyperdeterminant_exponent(k: usize) -> Option<u32> {
    let g = GroupElement::symbolic_factor(k);
    let dh = hyperdeterminant(&Hypermatrix::symbolic());
    let moved = g.apply_poly(&dh);
    let det = g.dets()[k - 1].clone();
    (0..=4).find(|&e| moved == det.pow(e) * &dh)
}
