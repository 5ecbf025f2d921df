use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the coordinate maps, the numerical routines and the
/// check harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Input lies outside (or too close to the boundary of) the region an
    /// operation is defined on. The message names the violated condition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A cosine-rule argument fell outside [-1, 1] by more than the rounding window.
    #[error("arccos argument {value} outside [-1, 1] beyond the clamping window")]
    Clamp { value: f64 },

    /// A finite-difference stencil point left the domain of the map.
    #[error("evaluation error at stencil point ({x}, {y}): {source}")]
    Evaluation {
        x: f64,
        y: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("quadrature budget of {intervals} intervals exhausted: estimated error {error:e} exceeds target {target:e}")]
    ToleranceNotMet {
        intervals: usize,
        error: f64,
        target: f64,
    },

    #[error("box is not contained in U0: {0}")]
    NotContained(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("unknown figure `{0}`")]
    UnknownFigure(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
