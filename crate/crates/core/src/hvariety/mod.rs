//! The key variety `H13`: the nine equations `x# = 0` of `J_P` over the
//! 17-dimensional space of coordinates and hypermatrix entries, its group
//! actions, the orbits of hypermatrices, fibers, charts and radicals.

pub mod chart;
pub mod fiber;
pub mod group;
pub mod orbit;
pub mod radical;
pub mod sample;

use thiserror::Error;

use crate::coord8::{generators, Hypermatrix, GEN_LABELS};
use crate::exactcore::{EquationSet, ExactError};
use crate::jordan::JordanError;
use crate::{Poly, Rational};

pub use chart::{chart_reduce_u1, mt_matrix, ChartReport, ChartVariant};
pub use fiber::{fiber_equations, FiberCase};
pub use group::{GroupElement, Perm3};
pub use orbit::{classify_orbit, flattening_ranks, hyperdeterminant, OrbitClass, OrbitLabel, SpecialPoint};
pub use radical::{radical_locus_check, RadicalReport};
pub use sample::{sample_point, HPoint};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error("group element has a singular factor g{0}")]
    SingularGroupElement(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

/// The nine generators for symbolic `P`, computed once.
pub fn symbolic_generators() -> &'static [Poly] {
    static GENS: std::sync::OnceLock<Vec<Poly>> = std::sync::OnceLock::new();
    GENS.get_or_init(|| generators(&Hypermatrix::symbolic()))
}

/// The nine generators with their labels, for symbolic `P`.
pub fn equations() -> EquationSet {
    labelled(symbolic_generators())
}

pub(crate) fn labelled(gens: &[Poly]) -> EquationSet {
    let ring = crate::coord8::ring();
    EquationSet::new(ring, GEN_LABELS.iter().map(|l| l.to_string()).zip(gens.iter().cloned())).expect("one ring")
}

/// Point of the 17-dimensional space as a full assignment of the shared ring
/// (spare symbols set to zero).
pub(crate) fn ring_point(x: &[Rational], p: &Hypermatrix<Rational>) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); crate::coord8::ring().len()];
    v[..9].clone_from_slice(&x[..9]);
    v[9..17].clone_from_slice(&p.entries);
    v
}

#[cfg(test)]
mod tests;
