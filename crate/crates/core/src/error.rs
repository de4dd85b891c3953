use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Violated preconditions of the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ambient: n = {n}, t = {t} (both must be at least 1)")]
    InvalidAmbient { n: usize, t: usize },

    #[error("indices {0:?} are not a strictly increasing sequence of positive integers")]
    NotIncreasing(Vec<usize>),

    #[error("index {index} lies outside [1, {n}]")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("monomial {monomial:?} is not {t}-spread")]
    NotSpread { monomial: Vec<usize>, t: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("operation needs a monomial of degree at least {min}, found degree {found}")]
    DegreeTooSmall { min: usize, found: usize },

    #[error("invalid Borel move x_{i}(u/x_{j}) on {monomial:?}: {reason}")]
    InvalidMove {
        monomial: Vec<usize>,
        i: usize,
        j: usize,
        reason: &'static str,
    },

    #[error("corner (k = {k}, l = {l}) needs max index {max} but n = {n}")]
    CornerOutOfRange { k: usize, l: usize, max: usize, n: usize },

    #[error("monomial {monomial:?} is not in A^{t}({k},{l})")]
    NotInA {
        monomial: Vec<usize>,
        k: usize,
        l: usize,
        t: usize,
    },

    #[error("segment endpoints out of order: {first:?} is slex-smaller than {last:?}")]
    SegmentOrder { first: Vec<usize>, last: Vec<usize> },

    #[error("segment size {requested} out of range 1..={available}")]
    SegmentSize { requested: u128, available: u128 },

    #[error("Borel shadow parameters violated: {0}")]
    ShadowParameters(String),

    #[error("the set is empty")]
    EmptySet,

    #[error("degree-{degree} component is not t-spread strongly stable")]
    NotStronglyStable { degree: usize },

    #[error("degree-{degree} component does not contain the shadow of degree {below}")]
    NotAnIdealComponent { degree: usize, below: usize },

    #[error("components must have consecutive degrees, found a jump from {from} to {to}")]
    DegreeJump { from: usize, to: usize },

    #[error("({k}, {l}) is not a corner of the ideal")]
    NotExtremal { k: usize, l: usize },

    #[error("n = {n} must exceed t = {t}")]
    NoDecomposition { n: usize, t: usize },

    #[error("initial degree l1 = {l1} outside the admissible range 2..={max}")]
    InitialDegree { l1: usize, max: i64 },

    #[error("binomial coefficient overflow")]
    Overflow,
}
