use thiserror::Error;

/// Errors surfaced by the computation pipeline.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VarCountMismatch { expected: usize, got: usize },

    #[error("weight vector is invalid: {0}")]
    BadWeights(String),

    #[error("input polynomial is constant")]
    DegenerateInput,

    #[error("polynomial is weighted homogeneous for these weights; the gap k is undefined")]
    NotMixed,

    #[error("the singular locus of the top form is not a curve (dimension {dim})")]
    NotCurve { dim: i64 },

    #[error("no rational representative found for a singular branch; supply one with --branch-point")]
    NonRationalBranch,

    #[error("transversal germ has a non-isolated singularity")]
    NonIsolatedGerm,

    #[error("Jacobian ideal of the transversal germ is not invariant under the isotropy action")]
    NonInvariantJacobian,

    #[error("suspension rule needs k >= 2 (for k = 1 the homogenized hypersurface has isolated singularity)")]
    NotApplicable,

    #[error("degree N must exceed every weight")]
    DegenerateWeights,

    #[error("result is conjectural (hypotheses of the closed formulas not met); pass --allow-conjectural to accept it")]
    Conjectural,

    #[error("stabilization of the virtual Euler characteristic failed up to m = {0}")]
    NoStabilization(u64),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
