//! Markov-chain model of the symmetric random walk.
//!
//! The transition matrix is kept in compressed sparse rows: a lattice state
//! has at most `2 * dims` successors, so one propagation step costs
//! `O(|E| * dims)`. State indices in the public API are 1-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Borders, GridSpec};

/// Row-stochastic transition matrix in CSR layout.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    // 0-based column indices, sorted within each row.
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl TransitionMatrix {
    /// Builds a matrix from per-row `(column, probability)` lists (1-based).
    /// Duplicate columns in a row are merged by summation.
    pub fn from_rows(rows: Vec<Vec<(usize, f64)>>) -> Result<Self> {
        let n = rows.len();
        let mut row_ptr = Vec::with_capacity(n + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for (i, mut row) in rows.into_iter().enumerate() {
            row.sort_by_key(|&(c, _)| c);
            for (c, p) in row {
                if c == 0 || c > n {
                    return Err(Error::StateOutOfRange { state: c, count: n });
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::param(
                        "transition",
                        format!("entry ({}, {c}) = {p} outside [0,1]", i + 1),
                    ));
                }
                if cols.len() > row_ptr[i] && cols.last() == Some(&(c - 1)) {
                    *vals.last_mut().unwrap() += p;
                } else {
                    cols.push(c - 1);
                    vals.push(p);
                }
            }
            row_ptr.push(cols.len());
        }
        Ok(TransitionMatrix {
            n,
            row_ptr,
            cols,
            vals,
        })
    }

    /// Number of states.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    fn row_raw(&self, i: usize) -> (&[usize], &[f64]) {
        let span = self.row_ptr[i]..self.row_ptr[i + 1];
        (&self.cols[span.clone()], &self.vals[span])
    }

    /// Nonzero entries of row `s` as 1-based `(column, probability)` pairs.
    pub fn row(&self, s: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let (c, v) = self.row_raw(s - 1);
        c.iter().zip(v).map(|(&c, &v)| (c + 1, v))
    }

    /// Entry `P[s][t]` (1-based); zero outside the sparsity pattern.
    pub fn get(&self, s: usize, t: usize) -> f64 {
        let (c, v) = self.row_raw(s - 1);
        match c.binary_search(&(t - 1)) {
            Ok(k) => v[k],
            Err(_) => 0.0,
        }
    }

    /// Dense row-major copy, mainly for export and small-matrix tests.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.n]; self.n];
        for (i, row) in out.iter_mut().enumerate() {
            let (c, v) = self.row_raw(i);
            for (&c, &v) in c.iter().zip(v) {
                row[c] = v;
            }
        }
        out
    }

    /// Coordinate-list triplets `(row, col, value)`, 1-based, row-major.
    pub fn triplets(&self) -> Vec<(usize, usize, f64)> {
        (0..self.n)
            .flat_map(|i| {
                let (c, v) = self.row_raw(i);
                c.iter().zip(v).map(move |(&c, &v)| (i + 1, c + 1, v))
            })
            .collect()
    }

    /// Largest `|row sum - 1|` over all rows.
    pub fn max_row_defect(&self) -> f64 {
        (0..self.n)
            .map(|i| (self.row_raw(i).1.iter().sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// `dst = src * P`, except that row `absorbing` (0-based) acts as the unit row.
    pub(crate) fn step_into(&self, src: &[f64], dst: &mut [f64], absorbing: Option<usize>) {
        dst.iter_mut().for_each(|x| *x = 0.0);
        for (i, &mass) in src.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            if Some(i) == absorbing {
                dst[i] += mass;
                continue;
            }
            let (c, v) = self.row_raw(i);
            for (&c, &p) in c.iter().zip(v) {
                dst[c] += mass * p;
            }
        }
    }
}

/// Transition matrix of the symmetric walk on `spec`.
///
/// Each of a state's neighbour entries gets probability `1/deg`, where `deg`
/// is the neighbour count (always `2 * dims` on boundless grids). Repeated
/// entries on length-2 boundless axes add up. The diagonal is zero.
pub fn build_chain(spec: &GridSpec) -> TransitionMatrix {
    let rows = (1..=spec.state_count())
        .map(|s| {
            let nb = spec.neighbors(s).expect("state in range");
            let p = 1.0 / nb.len() as f64;
            nb.into_iter().map(|t| (t, p)).collect()
        })
        .collect();
    TransitionMatrix::from_rows(rows).expect("lattice rows are valid")
}

/// Copy of `p` whose row `r` is replaced by the unit row `e_r`.
pub fn make_absorbing(p: &TransitionMatrix, r: usize) -> Result<TransitionMatrix> {
    if r == 0 || r > p.n {
        return Err(Error::StateOutOfRange {
            state: r,
            count: p.n,
        });
    }
    let rows = (1..=p.n)
        .map(|s| {
            if s == r {
                vec![(r, 1.0)]
            } else {
                p.row(s).collect()
            }
        })
        .collect();
    TransitionMatrix::from_rows(rows)
}

/// Probability row vector over the states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    /// Validates nonnegativity and unit mass (within 1e-12).
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::param("distribution", "empty vector"));
        }
        if probs.iter().any(|p| p.is_nan() || *p < 0.0) {
            return Err(Error::param("distribution", "negative or NaN entry"));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::param("distribution", format!("mass {total} != 1")));
        }
        Ok(Distribution { probs })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Probability of state `s` (1-based).
    pub fn prob(&self, s: usize) -> f64 {
        self.probs[s - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.probs
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// The single state carrying all the mass, if there is one.
    pub fn point_mass(&self) -> Option<usize> {
        let mut support = self.probs.iter().enumerate().filter(|(_, &p)| p > 0.0);
        match (support.next(), support.next()) {
            (Some((i, 1.0)), None) => Some(i + 1),
            _ => None,
        }
    }
}

/// How the agent's position at time 0 is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StartKind {
    /// Departs from the given state (1-based) with certainty.
    Deterministic(usize),
    /// Every state equally likely.
    Uniform,
}

/// Starting distribution `π₀` for a grid.
pub fn starting_distribution(spec: &GridSpec, kind: StartKind) -> Result<Distribution> {
    let n = spec.state_count();
    match kind {
        StartKind::Deterministic(s) => {
            spec.check_state(s)?;
            let mut probs = vec![0.0; n];
            probs[s - 1] = 1.0;
            Ok(Distribution { probs })
        }
        StartKind::Uniform => Ok(Distribution {
            probs: vec![1.0 / n as f64; n],
        }),
    }
}

/// A homogeneous discrete-time chain `(E, π₀, P)` on a lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainModel {
    spec: GridSpec,
    transition: TransitionMatrix,
    start: Distribution,
}

impl ChainModel {
    /// Symmetric walk on `spec` with the given start.
    pub fn new(spec: GridSpec, start: StartKind) -> Result<Self> {
        let start = starting_distribution(&spec, start)?;
        Ok(ChainModel {
            transition: build_chain(&spec),
            spec,
            start,
        })
    }

    /// Assembles a model from parts; sizes must agree.
    pub fn from_parts(
        spec: GridSpec,
        transition: TransitionMatrix,
        start: Distribution,
    ) -> Result<Self> {
        let n = spec.state_count();
        if transition.size() != n || start.len() != n {
            return Err(Error::param(
                "model",
                format!(
                    "grid has {n} states, matrix {}, start {}",
                    transition.size(),
                    start.len()
                ),
            ));
        }
        Ok(ChainModel {
            spec,
            transition,
            start,
        })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn transition(&self) -> &TransitionMatrix {
        &self.transition
    }

    pub fn start(&self) -> &Distribution {
        &self.start
    }

    pub fn state_count(&self) -> usize {
        self.spec.state_count()
    }

    /// Same chain, different starting distribution.
    pub fn with_start(&self, start: Distribution) -> Result<Self> {
        Self::from_parts(self.spec, self.transition.clone(), start)
    }

    /// Same start, transition matrix made absorbing in `r`.
    pub fn absorbing(&self, r: usize) -> Result<Self> {
        Ok(ChainModel {
            spec: self.spec,
            transition: make_absorbing(&self.transition, r)?,
            start: self.start.clone(),
        })
    }

    /// `π_n = π₀ Pⁿ` by `n` vector-matrix products.
    pub fn propagate(&self, n: usize) -> Distribution {
        let mut trajectory = Trajectory::new(self, None);
        for _ in 0..n {
            trajectory.advance();
        }
        Distribution {
            probs: trajectory.current().to_vec(),
        }
    }

    /// `(P²)[from][to]` from one sparse row-matrix product.
    pub fn two_step_probability(&self, from: usize, to: usize) -> Result<f64> {
        self.spec.check_state(from)?;
        self.spec.check_state(to)?;
        Ok(self
            .transition
            .row(from)
            .map(|(mid, p)| p * self.transition.get(mid, to))
            .sum())
    }
}

/// Streaming iterator over `π₀, π₁, π₂, …`, optionally with one absorbing state.
pub(crate) struct Trajectory<'a> {
    p: &'a TransitionMatrix,
    absorbing: Option<usize>,
    cur: Vec<f64>,
    next: Vec<f64>,
}

impl<'a> Trajectory<'a> {
    /// `absorbing` is a 1-based state.
    pub(crate) fn new(model: &'a ChainModel, absorbing: Option<usize>) -> Self {
        let n = model.state_count();
        Trajectory {
            p: &model.transition,
            absorbing: absorbing.map(|r| r - 1),
            cur: model.start.probs.clone(),
            next: vec![0.0; n],
        }
    }

    pub(crate) fn current(&self) -> &[f64] {
        &self.cur
    }

    pub(crate) fn advance(&mut self) {
        self.p.step_into(&self.cur, &mut self.next, self.absorbing);
        std::mem::swap(&mut self.cur, &mut self.next);
    }
}

/// Convenience: chain for a bordered or boundless planar grid.
pub fn planar_model(width: usize, depth: usize, borders: Borders, start: StartKind) -> Result<ChainModel> {
    ChainModel::new(GridSpec::planar(width, depth, borders)?, start)
}
