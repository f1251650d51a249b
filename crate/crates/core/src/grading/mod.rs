//! Weight systems on the coordinates, homogeneity checks, the linear solver
//! for admissible weights, canonical-class arithmetic and Hilbert series.

mod hilbert;
mod weights;

use thiserror::Error;

pub use hilbert::{
    canonical_arithmetic, fano_invariants, hilbert_numerator, CanonicalData, FanoInvariants, HilbertSeries,
    ResolutionDegrees, TPoly,
};
pub use weights::{
    check_homogeneous, solve_weight_constraints, Homogeneity, WeightLattice, WeightSystem,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GradingError {
    #[error("no weight given for {0}")]
    MissingWeight(String),
    #[error("weight rows disagree: {0}")]
    RowMismatch(String),
    #[error("the homogeneity constraints are inconsistent")]
    InfeasibleWeights,
    #[error("weight of {0} is not a positive integer")]
    NonPositiveWeight(String),
    #[error("shift {0} is not a nonnegative integer")]
    BadShift(String),
    #[error("numerator is not divisible by (1-t)^{0}")]
    NumeratorNotDivisible(u32),
    #[error("cannot remove {0} factors of weight {1} from the denominator")]
    NotEnoughSections(usize, u32),
    #[error("{0} does not occur in the solved system")]
    UnknownVariable(String),
    #[error("weight file: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
