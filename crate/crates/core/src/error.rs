use thiserror::Error;

use crate::coeffs::QPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("inexact polynomial division, remainder {remainder}")]
    InexactDivision { remainder: QPoly },

    #[error("polynomial of degree {degree} cannot be reversed within degree {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: &'static str, right: &'static str },

    #[error("operation not supported for the {basis} basis: {op}")]
    UnsupportedBasis { basis: &'static str, op: &'static str },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("subset element {element} outside [1, {bound}]")]
    SubsetOutOfRange { element: usize, bound: usize },

    #[error("forest edge {{{0}, {1}}} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),

    #[error("permutation is not below the Hessenberg function at position {0}")]
    NotBelow(usize),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
