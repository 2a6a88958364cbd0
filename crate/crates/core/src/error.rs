use thiserror::Error;

/// Errors produced by grid construction, chain operations, simulation and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid {width}x{depth}x{height}: {reason}")]
    InvalidGrid {
        width: usize,
        depth: usize,
        height: usize,
        reason: &'static str,
    },

    #[error("coordinate ({x},{y},{z}) outside grid {width}x{depth}x{height}")]
    CoordOutOfRange {
        x: usize,
        y: usize,
        z: usize,
        width: usize,
        depth: usize,
        height: usize,
    },

    #[error("state {state} outside 1..={count}")]
    StateOutOfRange { state: usize, count: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("infeasible probability triple (pA={p_a}, pB={p_b}, pAB={p_ab})")]
    InfeasibleProbabilities { p_a: f64, p_b: f64, p_ab: f64 },

    #[error("brute-force enumeration needs {bound:.3e} path-steps, limit is {limit:.0e}")]
    ResourceGuard { bound: f64, limit: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
