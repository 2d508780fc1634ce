//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch { expected: String, found: String },

    #[error("coordinate vector has length {found}, rank is {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("coordinate {0} has denominator larger than 2")]
    DenominatorTooLarge(String),

    #[error("weight {0} is outside the integral weight lattice")]
    NotIntegral(String),

    #[error("parity is undefined for algebra {0}")]
    ParityUndefined(String),

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight {0} is typical")]
    Typical(String),

    #[error("weight {0} is atypical")]
    Atypical(String),

    #[error("root {0} is not in the base")]
    NotInBase(String),

    #[error("root {0} is not odd isotropic")]
    NotIsotropic(String),

    #[error("degenerate base: simple roots are linearly dependent")]
    DegenerateBase,

    #[error("group closure exceeded the safety bound {0}")]
    ClosureBound(usize),

    #[error("no isotropic root vanishes on {0}")]
    NoVanishingRoot(String),

    #[error("several positive isotropic roots vanish on {0}")]
    AmbiguousVanishingRoot(String),

    #[error("no Weyl element maps the vanishing root to the reference root for {0}")]
    NoBlockElement(String),

    #[error("block {0} is typical; it has no c-parametrization")]
    TypicalBlock(String),

    #[error("c = {0} is not an allowed parameter of block {1}")]
    CNotAllowed(String, String),

    #[error("{0} is a special vertex; the requested operation is undefined there")]
    SpecialWeight(String),

    #[error("{0} is not a special vertex")]
    NotSpecial(String),

    #[error("{0} is not generic")]
    NotGeneric(String),

    #[error("character has a negative coefficient at {0}")]
    NegativeCoefficient(String),

    #[error("character has top coefficient {0}, expected 1")]
    BadTopCoefficient(i64),

    #[error("virtual character has an odd coefficient at {0}; halving is not defined")]
    OddCoefficient(String),

    #[error("support weight {0} has undefined parity")]
    SupportOutsideLattice(String),

    #[error("weights {0} and {1} lie in different blocks")]
    CrossBlock(String, String),

    #[error("blocks {0} and {1} are not comparable by translation")]
    BadBlockPair(String, String),

    #[error("translation of {vertex} is ambiguous at an undocumented position; candidates: {candidates}")]
    TranslationAmbiguity { vertex: String, candidates: String },

    #[error("translation of {0} has no dominant image in the target block")]
    TranslationEmpty(String),

    #[error("cannot parse rational from {0:?}")]
    BadRational(String),

    #[error("{0}")]
    Json(String),

    #[error("{0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
