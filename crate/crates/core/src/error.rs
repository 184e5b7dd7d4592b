//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced while building root data or evaluating orbit invariants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Cartan type string could not be parsed.
    #[error("invalid Cartan type `{0}`: {1}")]
    InvalidCartanType(String, String),

    /// Rank outside the admissible range for the series.
    #[error("series {series} does not admit rank {rank}")]
    InvalidRank { series: char, rank: usize },

    /// Vector length does not match the rank of the root system.
    #[error("rank mismatch: expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// Weight is not dominant where a dominant weight is required.
    #[error("weight {0} is not dominant")]
    NonDominantWeight(String),

    /// Orbit is not quantizable: the weight has a non-integral coordinate.
    #[error("non-integral weight: coordinate {index} is {value}, the orbit is not quantizable")]
    NotQuantizable { index: usize, value: String },

    /// The Weyl-character route is only defined for regular weights.
    #[error("weight is not regular: it pairs to zero with the coroot of {root}")]
    NotRegular { root: String },

    /// Weyl denominator too close to zero at the requested torus point.
    #[error(
        "Weyl denominator {magnitude:.3e} is below the floor {floor:.3e}; \
         perturb the torus point (central points are singular)"
    )]
    NearSingularTorusPoint { magnitude: f64, floor: f64 },

    /// Block sizes do not form a partition of n - 1.
    #[error("invalid partition for SU({n}): {reason}")]
    InvalidPartition { n: usize, reason: String },

    /// Requested point does not lie on the orbit sphere.
    #[error("point is off the unit sphere: |x| = {norm}")]
    OffSphere { norm: f64 },

    /// Quadrature grid too coarse.
    #[error("resolution {0} is too small, need at least {1}")]
    ResolutionTooSmall(usize, usize),

    /// The sphere orbit needs a nonzero character exponent.
    #[error("the character exponent m must be nonzero")]
    ZeroSphereExponent,

    /// Not enough sample points for a sweep.
    #[error("need at least {1} sample points, got {0}")]
    TooFewPoints(usize, usize),

    /// Malformed numeric input (weights, partitions, ...).
    #[error("cannot parse {field}: `{text}`")]
    Parse { field: &'static str, text: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
