use thiserror::Error;

/// Errors raised while building semigroups, constructions or verification grids.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive (got {0})")]
    ZeroGenerator(i64),
    #[error("gcd is not 1 (gcd = {0})")]
    GcdNotOne(i64),
    #[error("membership table would need more than 2^40 entries (bound {0})")]
    TooLarge(i128),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("sequence {0:?} is not a minimal generating set")]
    NotMinimalSequence(Vec<i64>),
    #[error("mu = {0} is a minimal generator of S1")]
    MuIsMinimalGenerator(i64),
    #[error("lambda = {0} is a minimal generator of S2")]
    LambdaIsMinimalGenerator(i64),
    #[error("mu = {0} is not an element of S1")]
    MuNotInS1(i64),
    #[error("lambda = {0} is not an element of S2")]
    LambdaNotInS2(i64),
    #[error("glued generators {0:?} are not a minimal generating set")]
    NotMinimalGluing(Vec<i64>),
    #[error("criterion not applicable: {0}")]
    NotApplicable(String),
    #[error("p = {p} exceeds the largest coefficient sum {max_sum} of a representation of {target}")]
    PTooLarge { p: i64, max_sum: i64, target: i64 },
    #[error("{0} is a minimal generator of S")]
    TargetIsGenerator(i64),
    #[error("{0} is not an element of S")]
    TargetNotInS(i64),
    #[error("ideal generator {0} is not an element of the ambient semigroup")]
    GeneratorNotInAmbient(i64),
    #[error("d = {0} is not odd")]
    DNotOdd(i64),
    #[error("d = {0} is not an element of S")]
    DNotInS(i64),
    #[error("ideal does not live in the duplicated semigroup")]
    NotAnIdeal,
    #[error("closed form does not cover S = N with E = S*")]
    DegenerateStar,
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("grid too large: estimated Frobenius number {0} exceeds 10^7")]
    GridTooLarge(i64),
}

impl Error {
    /// Stable variant name, printed by the CLI next to the message.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::ZeroGenerator(_) => "ZeroGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::TooLarge(_) => "TooLarge",
            Error::NotAMember(_) => "NotAMember",
            Error::InvalidParam(_) => "InvalidParam",
            Error::NotMinimalSequence(_) => "NotMinimalSequence",
            Error::MuIsMinimalGenerator(_) => "MuIsMinimalGenerator",
            Error::LambdaIsMinimalGenerator(_) => "LambdaIsMinimalGenerator",
            Error::MuNotInS1(_) => "MuNotInS1",
            Error::LambdaNotInS2(_) => "LambdaNotInS2",
            Error::NotMinimalGluing(_) => "NotMinimalGluing",
            Error::NotApplicable(_) => "NotApplicable",
            Error::PTooLarge { .. } => "PTooLarge",
            Error::TargetIsGenerator(_) => "TargetIsGenerator",
            Error::TargetNotInS(_) => "TargetNotInS",
            Error::GeneratorNotInAmbient(_) => "GeneratorNotInAmbient",
            Error::DNotOdd(_) => "DNotOdd",
            Error::DNotInS(_) => "DNotInS",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::DegenerateStar => "DegenerateStar",
            Error::UnknownClaim(_) => "UnknownClaim",
            Error::GridTooLarge(_) => "GridTooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
