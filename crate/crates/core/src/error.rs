use thiserror::Error;

/// Errors produced by the geometry, construction and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate triangle: area {area:e} is not above {threshold:e}")]
    DegenerateTriangle { area: f64, threshold: f64 },

    #[error("non-finite coordinate in input")]
    NonFinite,

    #[error("triangle is not scalene ({0:?})")]
    NotScalene(crate::geometry::ShapeClass),

    #[error("no sign change on bracket [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    BracketFailure {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("invalid regime: {0}")]
    InvalidRegime(String),

    #[error("invalid side lengths: {0}")]
    InvalidSides(String),

    #[error("side normals do not positively span the plane")]
    UnboundedShape,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
