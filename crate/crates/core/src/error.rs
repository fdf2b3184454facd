use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("series use different coefficient normalizations")]
    ConvolutionMismatch,
    #[error("order {upto} exceeds truncation order {order}")]
    OrderOutOfRange { upto: usize, order: usize },
    #[error("parts sum to {got}, expected {expected}")]
    PartsSum { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("{0:?} is not a partition of {1}")]
    InvalidPartition(alloc::vec::Vec<usize>, usize),
    #[error("position set {set:?} is not contained in [1, {max}]")]
    InvalidSubset { set: alloc::vec::Vec<usize>, max: usize },
    #[error("excedance count {j} out of range for n = {n}")]
    InvalidExcedance { n: usize, j: usize },
    #[error("need at least one variable")]
    NoVariables,
    #[error("expansion mixes degrees {0} and {1}")]
    MixedDegrees(usize, usize),
    #[error("invalid barred word: {0}")]
    InvalidWord(String),
    #[error("unsupported field size q = {0}")]
    UnsupportedField(u32),
    #[error("subspace lattice too large: q^n = {0} exceeds 81")]
    LatticeTooLarge(u64),
    #[error("relation is not a strict partial order")]
    NotAnOrder,
    #[error("poset is not ranked")]
    NotRanked,
    #[error("element {0} is not in the poset")]
    NoSuchElement(usize),
}
