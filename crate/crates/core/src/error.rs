use thiserror::Error;

use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell not in partition: {0}")]
    CellNotInPartition(Cell),
    #[error("repeated hole: {0}")]
    RepeatedHole(Cell),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("k = {k} exceeds the shadow size s = {s}")]
    KTooLarge { k: usize, s: usize },
    #[error("alphabet size must equal cell count (alphabet {alphabet}, cells {cells})")]
    AlphabetSize { alphabet: usize, cells: usize },
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("alphabet size {0} exceeds the supported maximum of {max}", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),
    #[error("power sums are defined for r >= 1")]
    ZeroPowerSum,
    #[error("cell count mismatch: {0} vs {1}")]
    CellCountMismatch(usize, usize),
    #[error("hole sets must all have the same size")]
    MixedHoleSetSizes,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
