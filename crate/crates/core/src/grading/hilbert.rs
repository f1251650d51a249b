use std::fmt;

use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::report::ser_rational;
use crate::Rational;

use super::{GradingError, WeightSystem};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `c = w(x11 x21 u1)`, `d = w(u1 u2 u3)`, `δ = c + d` and the twists of the
/// dualizing sheaves.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CanonicalData {
    #[serde(serialize_with = "ser_rational")]
    pub c: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub d: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub delta: Rational,
    /// Sum of the seventeen weights.
    #[serde(serialize_with = "ser_rational")]
    pub weight_sum: Rational,
    /// `c - 4d`.
    #[serde(serialize_with = "ser_rational")]
    pub omega_p_twist: Rational,
    /// `2c - 3d`.
    #[serde(serialize_with = "ser_rational")]
    pub omega_h_twist: Rational,
}

impl CanonicalData {
    /// `ω_P = O(-Σw)` agrees with `O(c - 4d)`.
    pub fn sum_identity_holds(&self) -> bool {
        self.weight_sum == q(4) * &self.d - &self.c
    }
}

fn w(ws: &WeightSystem, names: &[&str]) -> Result<Rational, GradingError> {
    names.iter().try_fold(q(0), |acc, n| Ok(acc + ws.weight(n)?))
}

pub fn canonical_arithmetic(ws: &WeightSystem) -> Result<CanonicalData, GradingError> {
    let c = w(ws, &["x11", "x21", "u1"])?;
    let d = w(ws, &["u1", "u2", "u3"])?;
    let names: Vec<&str> = crate::coord8::COORD_NAMES.iter().chain(crate::coord8::P_NAMES.iter()).copied().collect();
    let weight_sum = w(ws, &names)?;
    Ok(CanonicalData {
        delta: &c + &d,
        omega_p_twist: &c - q(4) * &d,
        omega_h_twist: q(2) * &c - q(3) * &d,
        c,
        d,
        weight_sum,
    })
}

/// Twists of the graded free resolution `P0 <- P1 <- P2 <- P3 <- P4`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionDegrees {
    pub shifts: [Vec<Rational>; 5],
    pub delta: Rational,
}

const X: [&str; 6] = ["x11", "x21", "x12", "x22", "x13", "x23"];
const U: [&str; 3] = ["u1", "u2", "u3"];

impl ResolutionDegrees {
    pub fn from_weights(ws: &WeightSystem) -> Result<Self, GradingError> {
        let cd = canonical_arithmetic(ws)?;
        let (c, d, delta) = (cd.c, cd.d, cd.delta);
        let mut p1 = Vec::new();
        let mut p3 = Vec::new();
        for x in X {
            p1.push(&c - ws.weight(x)?);
            p3.push(&d + ws.weight(x)?);
        }
        for u in U {
            p1.push(&d - ws.weight(u)?);
            p3.push(&c + ws.weight(u)?);
        }
        let mut p2 = vec![c.clone(), c.clone(), d.clone(), d.clone()];
        let triples = [
            ["u1", "u2", "x11"],
            ["u1", "u2", "x21"],
            ["u1", "u3", "x11"],
            ["u1", "u3", "x21"],
            ["u1", "u2", "x12"],
            ["u1", "u2", "x22"],
            ["u2", "u3", "x12"],
            ["u2", "u3", "x22"],
            ["u1", "u3", "x13"],
            ["u1", "u3", "x23"],
            ["u2", "u3", "x13"],
            ["u2", "u3", "x23"],
        ];
        for t in triples {
            p2.push(w(ws, &t)?);
        }
        Ok(ResolutionDegrees { shifts: [vec![q(0)], p1, p2, p3, vec![delta.clone()]], delta })
    }

    /// `P_i` and `δ - P_{4-i}` agree as multisets for every `i`.
    pub fn pairing_holds(&self) -> bool {
        (0..5).all(|i| {
            let mut a = self.shifts[i].clone();
            let mut b: Vec<Rational> = self.shifts[4 - i].iter().map(|s| &self.delta - s).collect();
            a.sort();
            b.sort();
            a == b
        })
    }
}

/// Univariate integer polynomial in `t`, coefficients listed from `t^0` up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly(pub Vec<i64>);

impl TPoly {
    pub fn new(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        TPoly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `t^n f(1/t) = f(t)` with `n` the given degree bound.
    pub fn is_palindromic(&self, n: usize) -> bool {
        let mut c = self.0.clone();
        c.resize(n + 1, 0);
        c.iter().eq(c.iter().rev())
    }

    /// Quotient by `1 - t`, when exact.
    pub fn div_one_minus_t(&self) -> Option<TPoly> {
        if self.at_one() != 0 {
            return None;
        }
        // f = (1 - t) g  gives  g_k = Σ_{i<=k} f_i
        let mut acc = 0;
        let mut g = Vec::with_capacity(self.0.len());
        for &f in &self.0[..self.0.len().saturating_sub(1)] {
            acc += f;
            g.push(acc);
        }
        Some(TPoly::new(g))
    }

    pub fn order_at_one(&self) -> u32 {
        let mut f = self.clone();
        let mut k = 0;
        while !f.0.is_empty() {
            match f.div_one_minus_t() {
                Some(g) => {
                    f = g;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    match e {
                        1 => write!(f, "t")?,
                        _ => write!(f, "t^{e}")?,
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn nonneg_int(s: &Rational) -> Result<usize, GradingError> {
    if !s.is_integer() || s.is_negative() {
        return Err(GradingError::BadShift(s.to_string()));
    }
    s.to_integer().to_usize().ok_or_else(|| GradingError::BadShift(s.to_string()))
}

/// `Σ_i (-1)^i Σ_{s in P_i} t^s`.
pub fn hilbert_numerator(ws: &WeightSystem) -> Result<TPoly, GradingError> {
    let res = ResolutionDegrees::from_weights(ws)?;
    let mut c = vec![0i64; nonneg_int(&res.delta)? + 1];
    for (i, list) in res.shifts.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for s in list {
            let e = nonneg_int(s)?;
            if e >= c.len() {
                c.resize(e + 1, 0);
            }
            c[e] += sign;
        }
    }
    Ok(TPoly::new(c))
}

/// `numerator / Π (1 - t^a)` for the listed weights `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertSeries {
    pub numerator: TPoly,
    pub denominator: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FanoInvariants {
    #[serde(serialize_with = "ser_rational")]
    pub degree: Rational,
    pub h0: i64,
    pub genus: i64,
}

impl HilbertSeries {
    /// Coefficients of the power series up to `t^n`.
    pub fn expand(&self, n: usize) -> Vec<i64> {
        let mut s = vec![0i64; n + 1];
        for (i, &c) in self.numerator.0.iter().enumerate().take(n + 1) {
            s[i] = c;
        }
        for &a in &self.denominator {
            // multiply by 1/(1 - t^a)
            let a = a as usize;
            for k in a..=n {
                s[k] += s[k - a];
            }
        }
        s
    }

    /// Leading coefficient of the pole at `t = 1`, given that `(1-t)^codim`
    /// divides the numerator; `h0` is the coefficient of `t^1`.
    pub fn invariants(&self, codim: u32) -> Result<FanoInvariants, GradingError> {
        let mut g = self.numerator.clone();
        for _ in 0..codim {
            g = g.div_one_minus_t().ok_or(GradingError::NumeratorNotDivisible(codim))?;
        }
        let prod = self.denominator.iter().fold(Rational::one(), |acc, a| acc * q(*a as i64));
        let degree = q(g.at_one()) / prod;
        let h0 = self.expand(1)[1];
        Ok(FanoInvariants { degree, h0, genus: h0 - 2 })
    }
}

/// Anticanonical invariants of a codimension-4 section of `H13`: the
/// numerator from the resolution, and `sections` denominator factors of
/// weight `section_weight` removed.
pub fn fano_invariants(ws: &WeightSystem, sections: usize, section_weight: u32) -> Result<FanoInvariants, GradingError> {
    let numerator = hilbert_numerator(ws)?;
    let mut denominator = Vec::new();
    for n in crate::coord8::COORD_NAMES.iter().chain(crate::coord8::P_NAMES.iter()) {
        let wq = ws.weight(n)?;
        if !wq.is_integer() || !wq.is_positive() {
            return Err(GradingError::NonPositiveWeight(n.to_string()));
        }
        denominator.push(wq.to_integer().to_u32().ok_or_else(|| GradingError::NonPositiveWeight(n.to_string()))?);
    }
    for _ in 0..sections {
        let i = denominator
            .iter()
            .position(|a| *a == section_weight)
            .ok_or(GradingError::NotEnoughSections(sections, section_weight))?;
        denominator.remove(i);
    }
    HilbertSeries { numerator, denominator }.invariants(4)
}
