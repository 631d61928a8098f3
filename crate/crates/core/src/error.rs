use thiserror::Error;

/// Errors raised by the exact verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid tensor slot {0}; expected one of 12, 13, 23")]
    InvalidSlot(u8),

    /// A rational function was evaluated where one of its denominators vanishes.
    /// The payload names the vanishing factor.
    #[error("degenerate denominator: {0} = 0")]
    DegenerateDenominator(String),

    #[error("all coordinates of a projective point are zero")]
    ZeroVector,

    #[error("point lies outside the affine chart: {0} = 0")]
    OutsideChart(&'static str),

    /// Every coordinate polynomial of a rational map vanishes at the input.
    #[error("{0} is undefined at a base point of the map")]
    BaseLocus(&'static str),

    #[error("weights do not lie on the quadric D with the given delta")]
    NotOnQuadric,

    #[error("number of lattice sites must be at least 1")]
    InvalidSites,

    #[error("lattice size {size} exceeds the enumeration limit {limit}")]
    EnumerationTooLarge { size: usize, limit: usize },

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
