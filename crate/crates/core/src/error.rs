use thiserror::Error;

use crate::shapes::{Composition, SkewShape};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Composition, outer: Composition },

    #[error("set element {element} is outside 1..{n}")]
    SetOutOfRange { element: usize, n: usize },

    #[error("generator index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("filling is not a standard immaculate tableau of shape {0}")]
    NotImmaculate(SkewShape),

    #[error("rows do not match the shape {0}")]
    ShapeMismatch(SkewShape),

    #[error("{0} is not a partition")]
    NotPartition(Composition),

    #[error("outer and inner lengths differ: {outer} vs {inner}")]
    LengthMismatch { outer: Composition, inner: Composition },

    #[error("entries 1..={m} do not occupy a composition diagram")]
    SplitNotComposition { m: usize },

    #[error("{0}")]
    Parse(String),
}
