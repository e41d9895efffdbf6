//! Error type shared by all engine layers.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("truncation order must be at least {min}, got {got}")]
    TruncationTooSmall { min: usize, got: usize },

    #[error("binomial factor needs j >= 1, got {0}")]
    InvalidFactor(u32),

    #[error("series truncation orders differ: {0} vs {1}")]
    MismatchedTruncation(usize, usize),

    #[error("series has no inverse: constant term is not 1")]
    NotInvertible,

    #[error("variable {0} missing from assignment")]
    MissingVariable(String),

    #[error("form degree p={p} out of range for dimension d={d}")]
    FormDegreeOutOfRange { p: u32, d: u32 },

    #[error("invalid manifold profile: {0}")]
    InvalidProfile(String),

    #[error("series hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("diamond dimension {dm} does not match profile dimension {pf}")]
    DimensionMismatch { dm: u32, pf: u32 },

    #[error("conflicting assignment on the symmetry orbit of h^{{{p},{j}}}: {a} vs {b}")]
    InconsistentOrbit { p: u32, j: u32, a: u64, b: u64 },

    #[error("diamond entry h^{{{p},{j}}} is a free variable; a numeric table is required")]
    UnassignedEntry { p: u32, j: u32 },

    #[error("constraint is not quadratic in the target: degree {0}")]
    NotQuadratic(u32),

    #[error("no lower-bound form: leading coefficient in the target is {0}")]
    BadLeadingCoefficient(String),

    #[error("discriminant is not affine in the remaining variables")]
    RadicandNotAffine,

    #[error("target {0} is already pinned by the profile or fixed assignment")]
    TargetPinned(String),

    #[error("search ceiling {0} exceeded while minimizing")]
    SearchCeilingExceeded(u64),

    #[error("greedy search and box sweep disagree: greedy {greedy}, sweep {sweep}")]
    SearchDiscrepancy { greedy: u64, sweep: u64 },

    #[error("regularity bound inapplicable: p = {p} <= l = {l}")]
    RegularityInapplicable { p: u32, l: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
