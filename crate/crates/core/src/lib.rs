//! Exact rational geometry for the generalized Haga fold.
//!
//! A square sheet `ABCD` is folded so that the corner `C` lands on a point
//! `E` of the line `DA`; the crease is the perpendicular bisector of `CE`.
//! This crate constructs the resulting configuration exactly over the
//! rationals, classifies it into its seven cases, builds the named circles of
//! the configuration (the tangent circle δ, the tritangent triple α/β/γ, and
//! ε₁…ε₆), and verifies the identities that hold between them with zero
//! tolerance. A floating-point re-derivation of the whole construction is
//! included for differential testing against the exact path.

pub mod config;
pub mod geom;
pub mod oracle;
mod rat;
pub mod tritangent;
pub mod verify;

pub use config::{
    classify, squares_from_triangle, CircleSet, HagaCase, HagaConfig, LengthIdentities,
    SquareConstruction,
};
pub use geom::{collinear, Circle, Line, LineIntersection, Point};
pub use oracle::{approx_build, compare, ApproxCircle, ApproxCircles, ApproxConfig};
pub use rat::Rat;
pub use tritangent::{
    hansen_relations, sin2_half_subtended, GeneralTriangleSides, HansenRelations, Placement,
    RightTriangleFrame, TritangentKind,
};
pub use verify::{
    case_coverage, sweep, sweep_sequential, verify, verify_at, CheckEntry, CheckId, CheckStatus,
    VerificationReport,
};

/// Errors shared across the exact path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degenerate input: points coincide")]
    DegenerateInput,
    #[error("square root of a negative rational")]
    NegativeSqrt,
    #[error("rational is not a perfect square")]
    NotASquare,
    #[error("malformed rational literal: {0:?} (expected P or P/Q with Q > 0)")]
    BadRational(String),
    #[error("not a valid triangle")]
    InvalidTriangle,
    #[error("pair admits no perpendicular common tangent")]
    UnsupportedPair,
    #[error("no tritangent circle satisfies the incidence constraint")]
    NoSuchCircle,
    #[error("square side must be positive")]
    InvalidSquare,
    #[error("the point F does not exist in this case")]
    NoF,
    #[error("input too close to the parallel configuration")]
    NearDegenerate,
    #[error("exact and approximate configurations disagree in shape: {0}")]
    ShapeMismatch(String),
}
