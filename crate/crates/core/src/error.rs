use alloc::string::String;

use crate::setlogic::SubsetMask;
use crate::states::StateViolation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("malformed rational `{0}`")]
    BadRational(String),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("universe size {0} outside 1..=64")]
    UniverseSize(usize),

    #[error("point {point} outside universe of size {size}")]
    PointOutOfRange { point: usize, size: usize },

    #[error("subset {mask} has points outside universe of size {size}")]
    MaskOutOfRange { mask: SubsetMask, size: usize },

    #[error("even logic needs an even size in 2..={max}, got {n}")]
    EvenLogicSize { n: usize, max: usize },

    #[error("span of rank {rank} is too large to enumerate")]
    SpanTooLarge { rank: u32 },

    #[error("{0} is not a member of the family")]
    NotMember(SubsetMask),

    #[error("{0} is assigned more than once")]
    DuplicateAssignment(SubsetMask),

    #[error("invalid state: {0}")]
    InvalidState(StateViolation),

    #[error("family is not closed under symmetric difference")]
    NotDifferenceClosed,

    #[error("family is not the logic of all even subsets of an even universe")]
    NotEvenLogic,

    #[error("points {0}, {1}, {2} are not pairwise distinct")]
    PointsNotDistinct(usize, usize, usize),

    #[error("point masses sum to {0}, expected 1")]
    MassesNotNormalized(String),

    #[error("induced value on {member} is negative")]
    NegativeValue { member: SubsetMask },

    #[error("sampler needs an even size in 4..=12, got {0}")]
    SampleSize(usize),

    #[error("sampler found no valid mass vector after {0} attempts")]
    SamplerExhausted(usize),

    #[error("simplex exceeded its iteration cap of {0}")]
    IterationCap(u64),
}
