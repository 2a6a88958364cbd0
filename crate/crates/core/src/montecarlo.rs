//! Monte Carlo rollouts of the walk and a brute-force path enumerator.
//!
//! Replication `i` draws from a ChaCha8 stream keyed by `(seed, i)`, and the
//! per-step tallies are integer counts, so results are bit-identical for any
//! thread count or chunk schedule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::ChainModel;
use crate::coverage::{CoverageCurve, Method};
use crate::error::{Error, Result};

/// Upper bound on `|E| * branching^n_max` accepted by [`brute_force_coverage`].
pub const BRUTE_FORCE_LIMIT: f64 = 1e8;

const CHUNK: usize = 1024;

#[derive(Debug, Clone)]
pub struct SimConfig<'a> {
    pub model: &'a ChainModel,
    pub n_max: usize,
    pub replications: u64,
    pub uav_count: u32,
    pub seed: u64,
    /// Also record, per state, a histogram of the step at which it was first covered.
    pub track_first_arrivals: bool,
}

impl<'a> SimConfig<'a> {
    pub fn new(model: &'a ChainModel, n_max: usize, replications: u64, seed: u64) -> Self {
        SimConfig {
            model,
            n_max,
            replications,
            uav_count: 1,
            seed,
            track_first_arrivals: false,
        }
    }

    pub fn uavs(mut self, k: u32) -> Self {
        self.uav_count = k;
        self
    }

    pub fn with_first_arrivals(mut self) -> Self {
        self.track_first_arrivals = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.replications < 1 {
            return Err(Error::param("replications", "must be at least 1"));
        }
        if self.uav_count < 1 {
            return Err(Error::param("uav_count", "must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub curve: CoverageCurve,
    pub stderr: Vec<f64>,
    /// `first_arrival_counts[r-1][n]`: replications in which state `r` was
    /// first covered at step `n`.
    pub first_arrival_counts: Option<Vec<Vec<u64>>>,
    pub seed: u64,
    pub replications: u64,
    pub uav_count: u32,
}

impl SimResult {
    /// Empirical `P(state r covered by step n)` for `n = 0..=n_max`.
    pub fn empirical_arrival_cdf(&self, r: usize) -> Option<Vec<f64>> {
        let counts = self.first_arrival_counts.as_ref()?.get(r.checked_sub(1)?)?;
        let reps = self.replications as f64;
        let mut total = 0u64;
        Some(
            counts
                .iter()
                .map(|&c| {
                    total += c;
                    total as f64 / reps
                })
                .collect(),
        )
    }
}

// Flattened rows with cumulative probabilities for inversion sampling.
struct Sampler {
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    cum: Vec<f64>,
    start_cum: Vec<f64>,
    start_point: Option<usize>,
}

impl Sampler {
    fn new(model: &ChainModel) -> Self {
        let p = model.transition();
        let mut row_ptr = vec![0];
        let mut cols = Vec::with_capacity(p.nnz());
        let mut cum = Vec::with_capacity(p.nnz());
        for s in 1..=p.size() {
            let mut acc = 0.0;
            for (t, v) in p.row(s) {
                acc += v;
                cols.push(t - 1);
                cum.push(acc);
            }
            row_ptr.push(cols.len());
        }
        let mut acc = 0.0;
        let start_cum = model
            .start()
            .as_slice()
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect();
        Sampler {
            row_ptr,
            cols,
            cum,
            start_cum,
            start_point: model.start().point_mass().map(|s| s - 1),
        }
    }

    fn start<R: Rng>(&self, rng: &mut R) -> usize {
        if let Some(s) = self.start_point {
            return s;
        }
        let u: f64 = rng.random();
        // First state whose cumulative mass exceeds u; it always has positive mass.
        let i = self.start_cum.partition_point(|&c| c <= u);
        // Round-off can leave the last cumulative value just below 1.
        i.min(self.start_cum.len() - 1)
    }

    fn step<R: Rng>(&self, s: usize, rng: &mut R) -> usize {
        let span = self.row_ptr[s]..self.row_ptr[s + 1];
        let cum = &self.cum[span.clone()];
        let cols = &self.cols[span];
        let u: f64 = rng.random();
        for (k, &c) in cum.iter().enumerate() {
            if u < c {
                return cols[k];
            }
        }
        cols[cols.len() - 1]
    }
}

#[derive(Clone)]
struct Tally {
    sum: Vec<u64>,
    sum_sq: Vec<u128>,
    first: Option<Vec<Vec<u64>>>,
}

impl Tally {
    fn new(states: usize, steps: usize, track: bool) -> Self {
        Tally {
            sum: vec![0; steps],
            sum_sq: vec![0; steps],
            first: track.then(|| vec![vec![0; steps]; states]),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.sum.iter_mut().zip(other.sum) {
            *a += b;
        }
        for (a, b) in self.sum_sq.iter_mut().zip(other.sum_sq) {
            *a += b;
        }
        if let (Some(a), Some(b)) = (self.first.as_mut(), other.first) {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
        }
        self
    }
}

/// Simulates `replications` independent runs of `uav_count` agents and
/// averages the covered fraction per step.
pub fn simulate_coverage(cfg: &SimConfig<'_>) -> Result<SimResult> {
    cfg.validate()?;
    let states = cfg.model.state_count();
    let steps = cfg.n_max + 1;
    let sampler = Sampler::new(cfg.model);
    let chunks = cfg.replications.div_ceil(CHUNK as u64);
    let fresh = || Tally::new(states, steps, cfg.track_first_arrivals);

    let tally = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut tally = fresh();
            let mut visited = vec![0u64; states.div_ceil(64)];
            let mut agents = vec![0usize; cfg.uav_count as usize];
            let lo = chunk * CHUNK as u64;
            let hi = (lo + CHUNK as u64).min(cfg.replications);
            for rep in lo..hi {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(rep);
                visited.iter_mut().for_each(|w| *w = 0);
                let mut covered = 0u64;
                for step in 0..steps {
                    for a in agents.iter_mut() {
                        *a = if step == 0 {
                            sampler.start(&mut rng)
                        } else {
                            sampler.step(*a, &mut rng)
                        };
                        let (word, bit) = (*a / 64, 1u64 << (*a % 64));
                        if visited[word] & bit == 0 {
                            visited[word] |= bit;
                            covered += 1;
                            if let Some(first) = tally.first.as_mut() {
                                first[*a][step] += 1;
                            }
                        }
                    }
                    tally.sum[step] += covered;
                    tally.sum_sq[step] += (covered as u128) * (covered as u128);
                }
            }
            tally
        })
        .reduce(fresh, Tally::merge);

    let reps = cfg.replications;
    let denom = reps as f64 * states as f64;
    let mut values = Vec::with_capacity(steps);
    let mut stderr = Vec::with_capacity(steps);
    for (&s1, &s2) in tally.sum.iter().zip(&tally.sum_sq) {
        values.push(s1 as f64 / denom);
        let se = if reps > 1 {
            // R * Σc² - (Σc)² is an exact nonnegative integer.
            let r = reps as u128;
            let num = r * s2 - (s1 as u128) * (s1 as u128);
            let var = num as f64 / (reps as f64 * (reps - 1) as f64);
            (var / reps as f64).sqrt() / states as f64
        } else {
            0.0
        };
        stderr.push(se);
    }
    Ok(SimResult {
        curve: CoverageCurve {
            method: Method::MonteCarlo,
            uav_count: cfg.uav_count,
            values,
        },
        stderr,
        first_arrival_counts: tally.first,
        seed: cfg.seed,
        replications: reps,
        uav_count: cfg.uav_count,
    })
}

/// Exact expected coverage by enumerating every weighted path of length
/// `n_max` from every start state with positive mass.
///
/// Independent of the absorbing-chain route; intended as a test oracle for
/// tiny instances.
pub fn brute_force_coverage(model: &ChainModel, n_max: usize) -> Result<CoverageCurve> {
    let p = model.transition();
    let states = model.state_count();
    let branching = (1..=states).map(|s| p.row(s).count()).max().unwrap_or(1);
    let bound = states as f64 * (branching as f64).powi(n_max as i32);
    if bound > BRUTE_FORCE_LIMIT {
        return Err(Error::ResourceGuard {
            bound,
            limit: BRUTE_FORCE_LIMIT,
        });
    }

    struct Walk<'a> {
        rows: Vec<Vec<(usize, f64)>>,
        visits: Vec<u32>,
        // Neumaier sums: one running total and one compensation term per step.
        acc: &'a mut [(f64, f64)],
        n_max: usize,
    }

    impl Walk<'_> {
        fn go(&mut self, depth: usize, s: usize, weight: f64, distinct: usize) {
            let fresh = self.visits[s] == 0;
            self.visits[s] += 1;
            let distinct = distinct + usize::from(fresh);
            let (sum, comp) = &mut self.acc[depth];
            let term = weight * distinct as f64;
            let t = *sum + term;
            *comp += if sum.abs() >= term.abs() {
                (*sum - t) + term
            } else {
                (term - t) + *sum
            };
            *sum = t;
            if depth < self.n_max {
                for k in 0..self.rows[s].len() {
                    let (t, q) = self.rows[s][k];
                    self.go(depth + 1, t, weight * q, distinct);
                }
            }
            self.visits[s] -= 1;
        }
    }

    let mut acc = vec![(0.0, 0.0); n_max + 1];
    let mut walk = Walk {
        rows: (1..=states)
            .map(|s| p.row(s).map(|(t, q)| (t - 1, q)).collect())
            .collect(),
        visits: vec![0; states],
        acc: &mut acc,
        n_max,
    };
    for (s, &w) in model.start().as_slice().iter().enumerate() {
        if w > 0.0 {
            walk.go(0, s, w, 0);
        }
    }
    Ok(CoverageCurve {
        method: Method::Exact,
        uav_count: 1,
        values: acc.into_iter().map(|(s, c)| (s + c) / states as f64).collect(),
    })
}
