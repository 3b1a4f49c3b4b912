use thiserror::Error;

/// Errors raised by the algebraic and geometric engines.
///
/// Relation failures and claim mismatches are data, not errors; see
/// [`crate::arrowgroup::RelationReport`] and [`crate::report::Status`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} out of range: {value} (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("invalid signed permutation: {0}")]
    InvalidSignedPerm(String),

    #[error("group closure exceeded cap of {cap} elements")]
    Overflow { cap: usize },

    #[error("generator {index} has a non-central square")]
    NonCentralSquare { index: usize },

    #[error("group does not contain a central -1")]
    MissingCentralMinusOne,

    #[error("signature ({p},{q}) does not match generator count {n}")]
    SignatureMismatch { p: usize, q: usize, n: usize },

    #[error("coordinate subspace {0:?} is not invariant")]
    NotInvariant(Vec<usize>),

    #[error("invalid coordinate subspace: {0}")]
    InvalidSubspace(String),

    #[error("matrix is not unitary (defect {defect:e})")]
    NotUnitary { defect: f64 },

    #[error("determinant is not 1 (defect {defect:e})")]
    NotSpecial { defect: f64 },

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("no rotation in SO(1) maps a vector to its negative")]
    NoRotationInDimensionOne,

    #[error("invalid vev: {0}")]
    InvalidVev(String),

    #[error("point is off the hypersurface (defect {defect:e})")]
    OffSurface { defect: f64 },

    #[error("finite-difference step {0} outside [1e-6, 1e-2]")]
    BadStep(f64),

    #[error("tangent frame is ill-conditioned")]
    IllConditionedFrame,

    #[error("degenerate radii r={r}, s={s}")]
    DegenerateRadii { r: f64, s: f64 },

    #[error("could not parse number {0:?}")]
    Parse(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
