//! Crate-wide error type.

use thiserror::Error;

use crate::pluecker::IndeterminacyClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension must be at least {need}")]
    DimensionTooSmall { need: usize },
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("line is not weakly ascending")]
    NotWeaklyAscending,
    #[error("box has min > max on axis {axis}")]
    InvalidBox { axis: usize },
    #[error("empty family")]
    EmptyFamily,
    #[error("weights must sum to 1")]
    BadWeights,
    #[error("convex combination requires non-negative weights")]
    NegativeWeight,
    #[error("Cremona lines have different supports")]
    MixedSupports,
    #[error("combination produced a negative w on axis {axis}")]
    NegativeW { axis: usize },
    #[error("combination leaves the Cremona chart on axis {axis}")]
    ChartExit { axis: usize },
    #[error("support index {0} out of range")]
    BadSupport(usize),
    #[error("empty support")]
    EmptySupport,
    #[error("point lies in the Cremona indeterminacy locus")]
    Indeterminate(IndeterminacyClass),
    #[error("expected a {expected}-side Pluecker point")]
    WrongChart { expected: char },
    #[error("expected exactly one vanishing p0 coordinate, found {found}")]
    ContractionPrecondition { found: usize },
    #[error("contraction image violates the expected structure")]
    ContractionStructure,
    #[error("direction coordinate on axis {axis} vanishes")]
    VanishingDirCoord { axis: usize },
    #[error("lines are dependent")]
    DependentLines,
    #[error("lines do not meet in a point")]
    LinesDoNotMeet,
    #[error("coincident lines")]
    CoincidentLines,
    #[error("projections to the ({i},{j}) coordinate plane are parallel")]
    ParallelProjection { i: usize, j: usize },
    #[error("generators share the Cremona direction coordinate on axes {axes:?}")]
    EqualCremonaDirection { axes: Vec<usize> },
    #[error("query line does not pass through the cone apex")]
    MissesApex,
    #[error("ruling hypothesis violated: {0}")]
    RulingHypothesis(String),
    #[error("*-box bounds are not comparable in the standard order on axis {axis}")]
    StarBoxOrder { axis: usize },
    #[error("ascending hyperplane normal must be non-negative and nonzero")]
    BadHyperplaneNormal,
    #[error("Fourier-Motzkin oracle limited to {limit} variables, got {got}")]
    FmTooManyVars { limit: usize, got: usize },
    #[error("linear program row {row} has {got} coefficients, expected {expected}")]
    BadLpRow {
        row: usize,
        got: usize,
        expected: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
