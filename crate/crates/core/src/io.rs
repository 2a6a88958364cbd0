//! CSV and JSON serialization.
//!
//! CSV output uses `,` between fields, `.` as decimal separator, `\n` line
//! endings and always starts with a header row. Floats are printed in their
//! shortest round-trip form, so parsing a field gives back the same `f64`.
//! Lines starting with `#` are comments (used for summaries) and are skipped
//! by the readers.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chain::TransitionMatrix;
use crate::coverage::CoverageCurve;
use crate::dependence::{DependenceReport, Verdict};
use crate::error::{Error, Result};
use crate::montecarlo::SimResult;

/// Numeric CSV table with a header row.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CsvTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        CsvTable {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Column by header name.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            for (k, v) in row.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
        let header: Vec<String> = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header row".into()))?
            .split(',')
            .map(|s| s.trim().to_string())
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let row = line
                .split(',')
                .map(|f| {
                    f.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Parse(format!("row {}: `{f}`: {e}", i + 1)))
                })
                .collect::<Result<Vec<f64>>>()?;
            if row.len() != header.len() {
                return Err(Error::Parse(format!(
                    "row {} has {} fields, header has {}",
                    i + 1,
                    row.len(),
                    header.len()
                )));
            }
            rows.push(row);
        }
        Ok(CsvTable { header, rows })
    }
}

/// Dense matrix CSV: header `state,1,…,n`, then one row per state.
pub fn matrix_to_csv(p: &TransitionMatrix) -> String {
    let n = p.size();
    let mut t = CsvTable::new(std::iter::once("state".to_string()).chain((1..=n).map(|c| c.to_string())));
    for (i, row) in p.to_dense().into_iter().enumerate() {
        let mut r = Vec::with_capacity(n + 1);
        r.push((i + 1) as f64);
        r.extend(row);
        t.push(r);
    }
    t.to_csv()
}

pub fn matrix_from_csv(text: &str) -> Result<TransitionMatrix> {
    let t = CsvTable::parse(text)?;
    let n = t.header.len().saturating_sub(1);
    if t.rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows, found {}", t.rows.len())));
    }
    let rows = t
        .rows
        .iter()
        .map(|r| {
            r[1..]
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0.0)
                .map(|(c, &v)| (c + 1, v))
                .collect()
        })
        .collect();
    TransitionMatrix::from_rows(rows)
}

/// Coordinate-list form of a matrix (1-based indices).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub vals: Vec<f64>,
}

impl From<&TransitionMatrix> for MatrixJson {
    fn from(p: &TransitionMatrix) -> Self {
        let trip = p.triplets();
        MatrixJson {
            n: p.size(),
            rows: trip.iter().map(|t| t.0).collect(),
            cols: trip.iter().map(|t| t.1).collect(),
            vals: trip.iter().map(|t| t.2).collect(),
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<TransitionMatrix> {
        if self.rows.len() != self.cols.len() || self.rows.len() != self.vals.len() {
            return Err(Error::Parse("rows/cols/vals lengths differ".into()));
        }
        let mut rows = vec![Vec::new(); self.n];
        for ((&r, &c), &v) in self.rows.iter().zip(&self.cols).zip(&self.vals) {
            if r == 0 || r > self.n {
                return Err(Error::Parse(format!("row index {r} outside 1..={}", self.n)));
            }
            rows[r - 1].push((c, v));
        }
        TransitionMatrix::from_rows(rows)
    }
}

pub fn matrix_to_json(p: &TransitionMatrix) -> Result<String> {
    Ok(serde_json::to_string(&MatrixJson::from(p))?)
}

pub fn matrix_from_json(text: &str) -> Result<TransitionMatrix> {
    serde_json::from_str::<MatrixJson>(text)?.to_matrix()
}

/// `step,value`.
pub fn curve_table(curve: &CoverageCurve) -> CsvTable {
    let mut t = CsvTable::new(["step", "value"]);
    for (n, &v) in curve.values.iter().enumerate() {
        t.push(vec![n as f64, v]);
    }
    t
}

/// `step,exact,naive`.
pub fn exact_naive_table(exact: &CoverageCurve, naive: &CoverageCurve) -> CsvTable {
    let mut t = CsvTable::new(["step", "exact", "naive"]);
    for (n, (&e, &v)) in exact.values.iter().zip(&naive.values).enumerate() {
        t.push(vec![n as f64, e, v]);
    }
    t
}

/// `step,mc_mean,mc_stderr`.
pub fn sim_table(sim: &SimResult) -> CsvTable {
    let mut t = CsvTable::new(["step", "mc_mean", "mc_stderr"]);
    for (n, (&m, &s)) in sim.curve.values.iter().zip(&sim.stderr).enumerate() {
        t.push(vec![n as f64, m, s]);
    }
    t
}

/// Exact, naive and simulated curves on a common step axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub exact: CoverageCurve,
    pub naive: CoverageCurve,
    pub simulation: SimResult,
    pub summary: ComparisonSummary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonSummary {
    /// `max_n |exact - naive|`.
    pub max_abs_exact_naive: f64,
    /// `max_n |exact - mc_mean|`.
    pub max_abs_exact_mc: f64,
    /// `max_n |exact - mc_mean| / mc_stderr`; steps with zero stderr count as 0
    /// when the difference is below 1e-12 and as infinity otherwise.
    pub max_z_exact_mc: f64,
}

impl Comparison {
    pub fn new(exact: CoverageCurve, naive: CoverageCurve, simulation: SimResult) -> Self {
        let max_z = exact
            .values
            .iter()
            .zip(&simulation.curve.values)
            .zip(&simulation.stderr)
            .map(|((e, m), &se)| z_score(*e, *m, se))
            .fold(0.0, f64::max);
        let summary = ComparisonSummary {
            max_abs_exact_naive: exact.max_abs_diff(&naive),
            max_abs_exact_mc: exact.max_abs_diff(&simulation.curve),
            max_z_exact_mc: max_z,
        };
        Comparison {
            exact,
            naive,
            simulation,
            summary,
        }
    }

    /// `step,exact,naive,mc_mean,mc_stderr`.
    pub fn table(&self) -> CsvTable {
        let mut t = CsvTable::new(["step", "exact", "naive", "mc_mean", "mc_stderr"]);
        for n in 0..self.exact.values.len() {
            t.push(vec![
                n as f64,
                self.exact.values[n],
                self.naive.values[n],
                self.simulation.curve.values[n],
                self.simulation.stderr[n],
            ]);
        }
        t
    }

    /// Table followed by a `#` summary line.
    pub fn to_csv(&self) -> String {
        let mut out = self.table().to_csv();
        writeln!(
            out,
            "# max_abs_exact_naive={},max_abs_exact_mc={},max_z_exact_mc={}",
            self.summary.max_abs_exact_naive, self.summary.max_abs_exact_mc, self.summary.max_z_exact_mc
        )
        .unwrap();
        out
    }
}

/// `|exact - mc| / stderr`, with the zero-stderr convention of [`ComparisonSummary`].
pub fn z_score(exact: f64, mc: f64, stderr: f64) -> f64 {
    let d = (exact - mc).abs();
    if stderr > 0.0 {
        d / stderr
    } else if d <= 1e-12 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// `state,time,p_m,lhs,rhs,verdict`.
pub fn dependence_to_csv(r: &DependenceReport) -> String {
    let verdict = match r.verdict {
        Verdict::Independent => "independent",
        Verdict::Dependent => "dependent",
        Verdict::UndefinedConditional => "undefined_conditional",
    };
    format!(
        "state,time,p_m,lhs,rhs,verdict\n{},{},{},{},{},{}\n",
        r.state, r.time, r.p_m, r.lhs, r.rhs, verdict
    )
}

pub fn dependence_from_csv(text: &str) -> Result<DependenceReport> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
    if header != "state,time,p_m,lhs,rhs,verdict" {
        return Err(Error::Parse(format!("unexpected header `{header}`")));
    }
    let line = lines.next().ok_or_else(|| Error::Parse("missing data row".into()))?;
    let f: Vec<&str> = line.split(',').collect();
    if f.len() != 6 {
        return Err(Error::Parse(format!("expected 6 fields, found {}", f.len())));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|e| Error::Parse(format!("`{s}`: {e}")));
    let int = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse(format!("`{s}`: {e}")));
    let verdict = match f[5] {
        "independent" => Verdict::Independent,
        "dependent" => Verdict::Dependent,
        "undefined_conditional" => Verdict::UndefinedConditional,
        other => return Err(Error::Parse(format!("unknown verdict `{other}`"))),
    };
    Ok(DependenceReport {
        state: int(f[0])?,
        time: int(f[1])?,
        p_m: num(f[2])?,
        lhs: num(f[3])?,
        rhs: num(f[4])?,
        verdict,
    })
}
