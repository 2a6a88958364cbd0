//! Coverage of symmetric random walks on rectangular lattices.
//!
//! An agent moves on a bordered or wrap-around 2D/3D grid, picking one of its
//! axis neighbours uniformly at each step. The crate computes
//!
//! - the transition matrix of that walk ([`chain::build_chain`]),
//! - the exact expected fraction of cells visited within `n` steps, using one
//!   absorbing chain per cell ([`coverage::expected_coverage_exact`]),
//! - the same for `k` independently moving agents
//!   ([`coverage::expected_coverage_multi`]),
//! - the independence-assuming product formula, which overestimates coverage
//!   ([`coverage::expected_coverage_naive`]),
//! - seeded Monte Carlo estimates and a brute-force path enumerator used as
//!   oracles ([`montecarlo`]),
//! - numeric checks of when occupancy events at one cell are dependent
//!   ([`dependence`]).
//!
//! ```
//! use gridwalk::prelude::*;
//!
//! let model = ChainModel::new(
//!     GridSpec::planar(3, 3, Borders::Bordered)?,
//!     StartKind::Deterministic(5),
//! )?;
//! let curve = expected_coverage_exact(&model, 1);
//! assert!((curve.value(1) - 2.0 / 9.0).abs() < 1e-15);
//! # Ok::<(), gridwalk::Error>(())
//! ```

pub mod chain;
pub mod cli;
pub mod coverage;
pub mod dependence;
mod error;
pub mod io;
pub mod lattice;
pub mod montecarlo;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::chain::{
        build_chain, make_absorbing, starting_distribution, ChainModel, Distribution, StartKind,
        TransitionMatrix,
    };
    pub use crate::coverage::{
        coverage_probability_exact, expected_coverage_exact, expected_coverage_multi,
        expected_coverage_naive, CoverageCurve, Method,
    };
    pub use crate::dependence::{
        check_successive_dependence, check_two_step_dependence, complement_independence_check,
        DependenceReport, Verdict,
    };
    pub use crate::lattice::{Borders, Coord, GridSpec};
    pub use crate::montecarlo::{brute_force_coverage, simulate_coverage, SimConfig, SimResult};
    pub use crate::{Error, Result};
}
