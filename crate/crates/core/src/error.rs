use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidType { family: String, rank: usize },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("{0} is not below {1} in the root poset")]
    NotBelow(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("affine root set is not an inversion set: {0}")]
    NotBiclosed(String),
    #[error("root set is not an ad-nilpotent ideal")]
    NotAnIdeal,
    #[error("ideal is not abelian")]
    NotAbelian,
    #[error("translation part {0} is not in the coroot lattice")]
    NotAffine(String),
    #[error("element is not attached to an ideal: {0}")]
    NotInImage(String),
    #[error("point {0} is not in the coweight lattice")]
    NotCoweight(String),
    #[error("point {point} is not in {set}")]
    OutOfRange { point: String, set: String },
    #[error("node {0} is not minuscule")]
    NotMinuscule(usize),
    #[error("root subsystem is not closed")]
    NotClosed,
    #[error("{0} is not a dominant coweight of level at most 2")]
    NotInX(String),
    #[error("compatible fibers are not defined for {0}")]
    UnsupportedClass(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not regular integral")]
    NotRegularIntegral(String),
    #[error("parameter {0} is not attached to a point of the abelian fiber")]
    NoCell(String),
    #[error("the Borel subalgebra attached to {0} is not compatible")]
    NotCompatible(String),
    #[error("negative multiplicity at {0}: input is not a module character")]
    NotACharacter(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
