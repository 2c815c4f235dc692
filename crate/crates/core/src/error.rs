use thiserror::Error;

use crate::pipedream::Violation;

/// Every failure the library can report. Variants carry enough context to
/// explain the failure without re-running the operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation window {0:?}: not a rearrangement of 1..n")]
    InvalidPermutation(Vec<usize>),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("permutation {0} is not vexillary")]
    NotVexillary(String),

    #[error("transposition ({0},{1}) needs two distinct positive indices")]
    InvalidTransposition(usize, usize),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("filling does not match its shape: {0}")]
    ShapeMismatch(String),

    #[error("cell {0:?} is not an inner corner")]
    NotInnerCorner((usize, usize)),

    #[error("no valid preimage: {0}")]
    NoPreimage(String),

    #[error("flag has {flag} bounds but the partition has {parts} parts")]
    FlagLengthMismatch { flag: usize, parts: usize },

    #[error("biword is not a reduced compatible sequence: {0}")]
    NotCompatible(Violation),

    #[error("invalid bumpless pipe dream: {0}")]
    InvalidBpd(String),

    #[error("invalid pipe dream: {0}")]
    InvalidPipeDream(String),

    #[error("no droop available from {from:?} into {to:?}")]
    DroopUnavailable { from: (usize, usize), to: (usize, usize) },

    #[error("Edelman-Greene insertion of {value} into a column ending in {value} is undefined")]
    UndefinedInsertion { value: usize },

    #[error("bumpless pipe dream has no blank tiles")]
    NoBlankTiles,

    #[error("transposition ({0},{1}) is not a legal bump: pipes must cross and the length must drop by one")]
    BumpGuard(usize, usize),

    #[error("pipes {0} and {1} do not cross")]
    PipesDoNotCross(usize, usize),

    #[error("grid of size {0} is too small for this move")]
    GridTooSmall(usize),

    #[error("{what} exceeded its iteration cap of {cap}")]
    IterationCap { what: &'static str, cap: usize },

    #[error("{0}")]
    NotFound(String),

    #[error("n = {n} exceeds the configured cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case identifier for scripts and JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::Parse { .. } => "parse",
            Error::NotVexillary(_) => "not_vexillary",
            Error::InvalidTransposition(..) => "invalid_transposition",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::NotInnerCorner(_) => "not_inner_corner",
            Error::NoPreimage(_) => "no_preimage",
            Error::FlagLengthMismatch { .. } => "flag_length_mismatch",
            Error::NotCompatible(_) => "not_compatible",
            Error::InvalidBpd(_) => "invalid_bpd",
            Error::InvalidPipeDream(_) => "invalid_pipe_dream",
            Error::DroopUnavailable { .. } => "droop_unavailable",
            Error::UndefinedInsertion { .. } => "undefined_insertion",
            Error::NoBlankTiles => "no_blank_tiles",
            Error::BumpGuard(..) => "bump_guard",
            Error::PipesDoNotCross(..) => "pipes_do_not_cross",
            Error::GridTooSmall(_) => "grid_too_small",
            Error::IterationCap { .. } => "iteration_cap",
            Error::NotFound(_) => "not_found",
            Error::SizeCap { .. } => "size_cap",
            Error::UnknownTheorem(_) => "unknown_theorem",
        }
    }
}
