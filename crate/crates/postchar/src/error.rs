//! Error type shared by all modules.

use thiserror::Error;

/// Coarse classification used by callers (e.g. the CLI exit-code mapping).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input data failed a mathematical validity check.
    Validation,
    /// A configured resource budget (matrix size, retry count, ...) ran out.
    Resource,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // ---- character admissibility / structure ----
    #[error("character is empty")]
    EmptyCharacter,
    #[error("gamma({index}) = {value}, expected -1 below the first nonnegative index")]
    PrefixValue { index: usize, value: i64 },
    #[error("character has no nonnegative value")]
    NoNonnegative,
    #[error("character values sum to {sum}, expected 0")]
    SumNonzero { sum: i64 },
    #[error("gamma({index}) = {value} < 0 but a positive character is required")]
    NotPositive { index: usize, value: i64 },
    #[error("not symmetric: gamma({index}) != gamma({mirror})")]
    NotSymmetric { index: usize, mirror: usize },
    #[error("middle value gamma({index}) = {value} must be even")]
    OddMiddle { index: usize, value: i64 },
    #[error("delta support {r} exceeds q/2 = {q}/2")]
    DeltaSupport { r: usize, q: usize },
    #[error("expected an ambient dimension {expected} character, got {got}")]
    AmbientMismatch { expected: u8, got: u8 },
    #[error("postulation is not monotone at n = {index}")]
    PhiNotMonotone { index: usize },
    #[error("postulation exceeds the ambient Hilbert function at n = {index}")]
    PhiTooLarge { index: usize },
    #[error("Hilbert polynomial is not linear (sum n*gamma(n) = {second_moment})")]
    NonLinearHilbert { second_moment: i64 },
    #[error("h-vector entry {value} at index {index} is negative")]
    HVectorNegative { index: usize, value: i64 },
    #[error("h-vector does not terminate (tail value {tail})")]
    HVectorDiverges { tail: i64 },

    // ---- biliaison ----
    #[error("character is the line; nothing to descend")]
    TerminalLine,
    #[error("plane-curve character of degree {degree}; use the plane descent")]
    PlaneCurve { degree: i64 },
    #[error("character is not a plane-curve character")]
    NotPlaneCurve,
    #[error("descent produced an invalid character: {source}")]
    DescentInvalid {
        #[source]
        source: Box<Error>,
    },
    #[error("descent chain aborted after {completed} steps at {at}: {detail}")]
    ChainAborted {
        completed: usize,
        at: String,
        detail: String,
    },
    #[error("no ascent preimage with s = {s_target} (valid targets are {s_low} and {s_high})")]
    NoPreimage {
        s_target: usize,
        s_low: usize,
        s_high: usize,
    },

    // ---- geometry ----
    #[error("catalog entry `{name}` failed validation: {detail}")]
    CatalogInvalid { name: String, detail: String },
    #[error("catalog file rejected: {detail}")]
    CatalogFormat { detail: String },
    #[error("surface `{name}` has no divisor-class data")]
    NoDivisorClass { name: String },
    #[error("surface `{name}` has no recorded family dimension")]
    NoFamilyDim { name: String },
    #[error("no curve character for m = {m} (need m >= r - 4 = {min_m})")]
    MhkBelowThreshold { m: i64, min_m: i64 },
    #[error("mH-K is not effective: formula degree {degree} < 1")]
    NotEffective { degree: i64 },
    #[error("nonspeciality fails: Y^2 = {y_squared} <= 2g - 2 = {bound}")]
    Speciality { y_squared: i64, bound: i64 },
    #[error("character does not match the mH-K family on surface `{name}`")]
    SurfaceMismatch { name: String },
    #[error("adjunction genus is not an integer for this class pair")]
    AdjunctionParity,

    // ---- resolution / pfaffian ----
    #[error("pfaffian requires an even-size matrix, got {n}")]
    PfaffianOddSize { n: usize },
    #[error("skew matrix of forms must have odd size, got {n}")]
    SkewEvenSize { n: usize },
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },
    #[error("entry ({row}, {col}) is not homogeneous of degree {expected}")]
    EntryDegree {
        row: usize,
        col: usize,
        expected: i64,
    },
    #[error("betti data rejected: {detail}")]
    BettiInvalid { detail: String },
    #[error("degree budget exceeded: {detail}")]
    ResourceLimit { detail: String },
    #[error("no generic matrix found after {attempts} attempts")]
    GenericityExhausted { attempts: u32 },

    // ---- misc ----
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("cannot parse character from `{input}`")]
    ParseCharacter { input: String },
    #[error("invalid bound: {detail}")]
    InvalidBound { detail: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ResourceLimit { .. }
            | Error::GenericityExhausted { .. }
            | Error::CatalogInvalid { .. }
            | Error::CatalogFormat { .. }
            | Error::Overflow => ErrorKind::Resource,
            _ => ErrorKind::Validation,
        }
    }
}
