//! The `u1`-chart of `H13` and the Pfaffian description of the `x11`-chart.
//!
//! On `u1 = 1` the nine equations are solved by `x1 = D3 x2`, `u3 = -det D2`
//! and `u2 = -det D3`, leaving `x2, x3` and the eight `p` free.

use serde::Serialize;

use crate::coord8::{self, coords, d_entry, d_matrix, det2, ring, ui, xi, Hypermatrix, Residual, GEN_LABELS};
use crate::exactcore::PolyMatrix;
use crate::{Poly, QMatrix, Rational};

use super::sample::HPoint;
use super::{symbolic_generators, HError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChartVariant {
    /// `u2 = -det D3`, which solves `u3# = 0`.
    Corrected,
    /// `u2 = -det D1`, as sometimes printed; leaves residuals.
    Literal,
    /// Negative control: `u3` is left unsubstituted.
    OmitU3,
}

/// Images of all ring variables under the chart substitution.
pub fn chart_substitution(variant: ChartVariant) -> Vec<Poly> {
    let r = ring();
    let mut img: Vec<Poly> = r.vars().map(|v| Poly::var(r, v)).collect();
    let p = Hypermatrix::symbolic();
    let mut y = coords();
    y[ui(1)] = coord8::int(1);
    let x1 = d_matrix(&p, 3, &y).mul_vec(&[y[xi(1, 2)].clone(), y[xi(2, 2)].clone()]).expect("2x2");
    y[xi(1, 1)] = x1[0].clone();
    y[xi(2, 1)] = x1[1].clone();
    let det = |k: usize| det2(&d_matrix(&p, k, &y));
    let u2 = match variant {
        ChartVariant::Literal => -det(1),
        _ => -det(3),
    };
    if variant != ChartVariant::OmitU3 {
        y[ui(3)] = -det(2);
    }
    y[ui(2)] = u2;
    img[..9].clone_from_slice(&y);
    img
}

#[derive(Debug, Clone, Serialize)]
pub struct ChartReport {
    pub variant: ChartVariant,
    /// Nonzero generators after substitution, labelled.
    #[serde(serialize_with = "ser_residuals")]
    pub residuals: Vec<Residual>,
    /// Variables the substituted coordinates depend on.
    pub free_vars: Vec<String>,
    /// Free variables plus one for the scaling factor.
    pub dimension: usize,
}

fn ser_residuals<S: serde::Serializer>(r: &[Residual], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for (l, p) in r {
        seq.serialize_element(&format!("{l}: {p}"))?;
    }
    seq.end()
}

impl ChartReport {
    pub fn residual_labels(&self) -> Vec<&str> {
        self.residuals.iter().map(|(l, _)| l.as_str()).collect()
    }
}

pub fn chart_reduce_u1(variant: ChartVariant) -> ChartReport {
    let img = chart_substitution(variant);
    let r = ring();
    let residuals = symbolic_generators()
        .iter()
        .zip(GEN_LABELS)
        .map(|(g, l)| (l.to_string(), g.map_into(r, &img).expect("one ring")))
        .filter(|(_, g)| !g.is_zero())
        .collect();
    let mut support: Vec<usize> = img[..9].iter().flat_map(|f| f.support()).map(|v| v.0).collect();
    support.sort_unstable();
    support.dedup();
    let free_vars: Vec<String> = support.into_iter().map(|v| r.names()[v].clone()).collect();
    let dimension = free_vars.len() + 1;
    ChartReport { variant, residuals, free_vars, dimension }
}

/// The skew matrix `M_T` for coordinates `x` (with `x11 = 1` expected).
pub fn mt_matrix(p: &Hypermatrix<Poly>, x: &[Poly]) -> QMatrix {
    let d = |i, j| d_entry(p, 1, i, j, x);
    let v = |a, i| x[xi(a, i)].clone();
    let upper = vec![
        v(1, 3),
        v(2, 3),
        -v(2, 2),
        v(1, 2),
        -x[ui(2)].clone(),
        d(2, 1),
        -d(1, 1),
        d(2, 2),
        -d(1, 2),
        x[ui(3)].clone(),
    ];
    PolyMatrix::skew_from_upper(ring(), 5, &upper).expect("ten entries")
}

/// The five signed Pfaffians of `M_T` at a point with `x11 != 0`, after
/// rescaling the coordinates so that `x11 = 1`.
pub fn mt_pfaffians_at(pt: &HPoint) -> Result<Vec<Rational>, HError> {
    let x11 = pt.x[xi(1, 1)].clone();
    if x11 == Rational::from_integer(0.into()) {
        return Err(HError::Internal("x11 = 0".into()));
    }
    let x: Vec<Poly> = pt.x.iter().map(|c| coord8::konst(&(c / &x11))).collect();
    let m = mt_matrix(&pt.p.to_polys(), &x);
    m.sub_pfaffians()?
        .into_iter()
        .map(|f| f.as_constant().ok_or_else(|| HError::Internal("non-constant Pfaffian".into())))
        .collect()
}
