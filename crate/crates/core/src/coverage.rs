//! Expected coverage of a lattice walk.
//!
//! The probability that state `r` has been visited by time `n` equals the
//! probability of sitting in `r` at time `n` in the chain where `r` is made
//! absorbing. Averaging that over all states gives the expected covered
//! fraction. The independence-assuming product formula is kept alongside as
//! a comparison baseline; it is not a correct coverage estimate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{ChainModel, Trajectory};
use crate::error::{Error, Result};

/// How a coverage curve was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Naive,
    MonteCarlo,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Naive => "naive",
            Method::MonteCarlo => "monte_carlo",
        }
    }
}

/// Expected covered fraction for each step `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageCurve {
    pub method: Method,
    pub uav_count: u32,
    pub values: Vec<f64>,
}

impl CoverageCurve {
    /// Last step index covered by the curve.
    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn value(&self, n: usize) -> f64 {
        self.values[n]
    }

    /// `max_n |self[n] - other[n]|` over the common prefix.
    pub fn max_abs_diff(&self, other: &CoverageCurve) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `P(state r visited by step n)` for `n = 0..=n_max`.
pub fn first_arrival_cdf(model: &ChainModel, r: usize, n_max: usize) -> Result<Vec<f64>> {
    model.spec().check_state(r)?;
    Ok(arrival_curve(model, r, n_max))
}

fn arrival_curve(model: &ChainModel, r: usize, n_max: usize) -> Vec<f64> {
    let mut traj = Trajectory::new(model, Some(r));
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(traj.current()[r - 1]);
    for _ in 0..n_max {
        traj.advance();
        out.push(traj.current()[r - 1]);
    }
    out
}

/// `P(C_{n,r} = 1)`: probability that state `r` is visited within `n` steps.
pub fn coverage_probability_exact(model: &ChainModel, r: usize, n: usize) -> Result<f64> {
    Ok(first_arrival_cdf(model, r, n)?[n])
}

/// Per-state arrival CDFs, one row per state, computed in parallel.
pub fn arrival_table(model: &ChainModel, n_max: usize) -> Vec<Vec<f64>> {
    (1..=model.state_count())
        .into_par_iter()
        .map(|r| arrival_curve(model, r, n_max))
        .collect()
}

// Rows are reduced in state order so the result does not depend on scheduling.
fn average_over_states(table: &[Vec<f64>], n_max: usize, per_state: impl Fn(f64) -> f64) -> Vec<f64> {
    let states = table.len() as f64;
    let mut sums = vec![0.0; n_max + 1];
    for row in table {
        for (acc, &p) in sums.iter_mut().zip(row) {
            *acc += per_state(p);
        }
    }
    sums.into_iter().map(|s| s / states).collect()
}

/// Exact expected coverage for one agent.
pub fn expected_coverage_exact(model: &ChainModel, n_max: usize) -> CoverageCurve {
    let table = arrival_table(model, n_max);
    CoverageCurve {
        method: Method::Exact,
        uav_count: 1,
        values: average_over_states(&table, n_max, |p| p),
    }
}

/// `1 - (1 - p)^k`, by repeated multiplication so that it is monotone in `k`
/// under rounding.
fn any_of(p: f64, k: u32) -> f64 {
    let miss = 1.0 - p;
    let mut all_miss = 1.0;
    for _ in 0..k {
        all_miss *= miss;
    }
    1.0 - all_miss
}

/// Exact expected coverage for `k` agents moving independently on the same chain.
pub fn expected_coverage_multi(model: &ChainModel, n_max: usize, k: u32) -> Result<CoverageCurve> {
    if k < 1 {
        return Err(Error::param("uav_count", "must be at least 1"));
    }
    let table = arrival_table(model, n_max);
    Ok(CoverageCurve {
        method: Method::Exact,
        uav_count: k,
        values: average_over_states(&table, n_max, |p| any_of(p, k)),
    })
}

/// Multi-agent curves for several agent counts sharing one absorbing sweep.
pub fn expected_coverage_multi_many(
    model: &ChainModel,
    n_max: usize,
    ks: &[u32],
) -> Result<Vec<CoverageCurve>> {
    if ks.iter().any(|&k| k < 1) {
        return Err(Error::param("uav_count", "must be at least 1"));
    }
    let table = arrival_table(model, n_max);
    Ok(ks
        .iter()
        .map(|&k| CoverageCurve {
            method: Method::Exact,
            uav_count: k,
            values: average_over_states(&table, n_max, |p| any_of(p, k)),
        })
        .collect())
}

/// Independence-assuming coverage: `1 - Π_{t≤n} (1 - P(X_t = z))`, averaged
/// over states. Kept for comparison only.
pub fn expected_coverage_naive(model: &ChainModel, n_max: usize) -> CoverageCurve {
    naive_curve(model, n_max, 1)
}

/// The naive per-state probability combined over `k` independent agents.
pub fn expected_coverage_naive_multi(model: &ChainModel, n_max: usize, k: u32) -> Result<CoverageCurve> {
    if k < 1 {
        return Err(Error::param("uav_count", "must be at least 1"));
    }
    Ok(naive_curve(model, n_max, k))
}

fn naive_curve(model: &ChainModel, n_max: usize, k: u32) -> CoverageCurve {
    let n = model.state_count();
    let mut traj = Trajectory::new(model, None);
    let mut miss = vec![1.0; n];
    let mut values = Vec::with_capacity(n_max + 1);
    for step in 0..=n_max {
        if step > 0 {
            traj.advance();
        }
        let mut sum = 0.0;
        for (m, &p) in miss.iter_mut().zip(traj.current()) {
            *m *= 1.0 - p;
            sum += if k == 1 { 1.0 - *m } else { any_of(1.0 - *m, k) };
        }
        values.push(sum / n as f64);
    }
    CoverageCurve {
        method: Method::Naive,
        uav_count: k,
        values,
    }
}
