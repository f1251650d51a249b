//! Rational points of `H13` from the `u1`-chart.

use serde::Serialize;

use crate::coord8::{ring, Hypermatrix, COORD_NAMES, P_NAMES};
use crate::sampling::{nonzero_rational, rational, Rng8};
use crate::Rational;

use super::chart::{chart_substitution, ChartVariant};
use super::{ring_point, symbolic_generators, HError};

/// Free coordinates of the chart.
pub const CHART_FREE: [&str; 4] = ["x12", "x22", "x13", "x23"];

#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    pub x: Vec<Rational>,
    pub p: Hypermatrix<Rational>,
}

/// Serialized as the 17 rationals in the fixed variable order.
impl Serialize for HPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.as_vec().iter().map(|q| q.to_string()))
    }
}

impl HPoint {
    pub fn new(x: Vec<Rational>, p: Hypermatrix<Rational>) -> Self {
        HPoint { x, p }
    }

    /// The 17 coordinates in the fixed variable order.
    pub fn as_vec(&self) -> Vec<Rational> {
        self.x.iter().chain(self.p.entries.iter()).cloned().collect()
    }

    pub fn failures(&self) -> Result<Vec<usize>, HError> {
        let pt = ring_point(&self.x, &self.p);
        let mut out = Vec::new();
        for (n, g) in symbolic_generators().iter().enumerate() {
            if g.evaluate(&pt)? != Rational::from_integer(0.into()) {
                out.push(n);
            }
        }
        Ok(out)
    }
}

/// A seeded point of `H13` with `u1 != 0`. `constraints` may fix any of
/// [`CHART_FREE`], any `p` entry, and `scale` (the value of `u1`, nonzero).
pub fn sample_point(rng: &mut Rng8, constraints: &[(&str, Rational)]) -> Result<HPoint, HError> {
    let r = ring();
    let zero = Rational::from_integer(0.into());
    let mut values = vec![zero.clone(); r.len()];
    let mut scale = nonzero_rational(rng);
    for name in CHART_FREE.iter().chain(P_NAMES.iter()) {
        values[r.v(name).0] = rational(rng);
    }
    for (name, q) in constraints {
        if *name == "scale" {
            if q == &zero {
                return Err(HError::Internal("scale must be nonzero".into()));
            }
            scale = q.clone();
        } else if CHART_FREE.contains(name) || P_NAMES.contains(name) {
            values[r.v(name).0] = q.clone();
        } else {
            return Err(HError::Internal(format!("{name} is not a free chart coordinate")));
        }
    }
    let img = chart_substitution(ChartVariant::Corrected);
    let mut x = Vec::with_capacity(9);
    for f in &img[..COORD_NAMES.len()] {
        x.push(f.evaluate(&values)? * &scale);
    }
    let p = Hypermatrix { entries: std::array::from_fn(|n| values[9 + n].clone()) };
    let pt = HPoint::new(x, p);
    let bad = pt.failures()?;
    if !bad.is_empty() {
        return Err(HError::Internal(format!("sampled point fails generators {bad:?}")));
    }
    Ok(pt)
}
