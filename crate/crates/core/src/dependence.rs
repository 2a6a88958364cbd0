//! Numeric checks for (in)dependence of state-occupancy events.
//!
//! For a fixed state `z` the events `{X_m = z}` and `{X_{m+2} = z}` are
//! independent exactly when `P(X_m = z)` is 0 or 1, or when
//! `(1 - P(X_m = z)) P²(z,z) = Σ_{i≠z} P(X_m = i) P²(i,z)`.

use serde::{Deserialize, Serialize};

use crate::chain::ChainModel;
use crate::error::{Error, Result};

/// Below this a probability is treated as zero (or one, for `1 - p`).
pub const PROBABILITY_EPS: f64 = 1e-12;
/// Tolerance for `lhs == rhs` in the two-step condition.
pub const BALANCE_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Independent,
    Dependent,
    /// `P(X_m = z) = 0`: the conditional is undefined. The events are still
    /// independent in the product sense.
    UndefinedConditional,
}

impl Verdict {
    /// True unless the events are dependent.
    pub fn events_independent(&self) -> bool {
        !matches!(self, Verdict::Dependent)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DependenceReport {
    pub state: usize,
    pub time: usize,
    pub p_m: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub verdict: Verdict,
}

/// Decides whether `{X_m = z}` and `{X_{m+2} = z}` are dependent.
pub fn check_two_step_dependence(model: &ChainModel, z: usize, m: usize) -> Result<DependenceReport> {
    model.spec().check_state(z)?;
    let pi = model.propagate(m);
    let p_m = pi.prob(z);
    let lhs = (1.0 - p_m) * model.two_step_probability(z, z)?;
    let mut rhs = 0.0;
    for (i, &p) in pi.as_slice().iter().enumerate() {
        let i = i + 1;
        if i != z && p > 0.0 {
            rhs += p * model.two_step_probability(i, z)?;
        }
    }
    let verdict = if p_m <= PROBABILITY_EPS {
        Verdict::UndefinedConditional
    } else if p_m >= 1.0 - PROBABILITY_EPS || (lhs - rhs).abs() <= BALANCE_EPS {
        Verdict::Independent
    } else {
        Verdict::Dependent
    };
    Ok(DependenceReport {
        state: z,
        time: m,
        p_m,
        lhs,
        rhs,
        verdict,
    })
}

/// Decides whether `{X_t = z}` and `{X_{t+1} = z}` are dependent.
///
/// The joint probability is always zero since the walk never stays put, so
/// the events are dependent exactly when both marginals are positive.
pub fn check_successive_dependence(model: &ChainModel, z: usize, t: usize) -> Result<Verdict> {
    model.spec().check_state(z)?;
    let now = model.propagate(t);
    let next = model.with_start(now.clone())?.propagate(1);
    if now.prob(z) > PROBABILITY_EPS && next.prob(z) > PROBABILITY_EPS {
        Ok(Verdict::Dependent)
    } else {
        Ok(Verdict::Independent)
    }
}

/// Checks independence of events `A`, `B` and of their complements.
///
/// Returns `(P(A∩B) = P(A)P(B), P(Aᶜ∩Bᶜ) = P(Aᶜ)P(Bᶜ))`, each within 1e-12.
/// The two flags always agree.
pub fn complement_independence_check(p_a: f64, p_b: f64, p_ab: f64) -> Result<(bool, bool)> {
    let eps = PROBABILITY_EPS;
    let in_unit = |p: f64| (-eps..=1.0 + eps).contains(&p);
    let feasible = in_unit(p_a)
        && in_unit(p_b)
        && p_ab >= -eps
        && p_ab <= p_a.min(p_b) + eps
        && p_a + p_b - p_ab <= 1.0 + eps;
    if !feasible {
        return Err(Error::InfeasibleProbabilities { p_a, p_b, p_ab });
    }
    let events = (p_ab - p_a * p_b).abs() <= eps;
    let joint_complement = 1.0 - (p_a + p_b - p_ab);
    let product_complement = (1.0 - p_a) * (1.0 - p_b);
    let complements = (joint_complement - product_complement).abs() <= eps;
    Ok((events, complements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{planar_model, StartKind};
    use crate::lattice::Borders;

    #[test]
    fn two_step_examples() {
        let m = planar_model(3, 3, Borders::Bordered, StartKind::Deterministic(5)).unwrap();

        let r = check_two_step_dependence(&m, 5, 0).unwrap();
        assert_eq!(r.p_m, 1.0);
        assert_eq!(r.verdict, Verdict::Independent);

        let r = check_two_step_dependence(&m, 1, 2).unwrap();
        assert!((r.p_m - 1.0 / 6.0).abs() < 1e-12);
        assert!((r.lhs - 5.0 / 18.0).abs() < 1e-12);
        assert!((r.rhs - 1.0 / 9.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Dependent);

        let r = check_two_step_dependence(&m, 1, 1).unwrap();
        assert_eq!(r.p_m, 0.0);
        assert_eq!(r.verdict, Verdict::UndefinedConditional);
        assert!(r.verdict.events_independent());

        assert!(check_two_step_dependence(&m, 0, 1).is_err());
    }

    #[test]
    fn successive_examples() {
        let torus = planar_model(5, 5, Borders::Boundless, StartKind::Uniform).unwrap();
        for z in 1..=25 {
            assert_eq!(check_successive_dependence(&torus, z, 0).unwrap(), Verdict::Dependent);
        }
        let m = planar_model(3, 3, Borders::Bordered, StartKind::Deterministic(5)).unwrap();
        assert_eq!(check_successive_dependence(&m, 5, 0).unwrap(), Verdict::Independent);
        let u = planar_model(3, 3, Borders::Bordered, StartKind::Uniform).unwrap();
        assert_eq!(check_successive_dependence(&u, 5, 3).unwrap(), Verdict::Dependent);
    }

    #[test]
    fn odd_torus_returns_in_odd_steps() {
        let m = planar_model(3, 4, Borders::Boundless, StartKind::Deterministic(1)).unwrap();
        let found = (0..6).any(|t| {
            (1..=12).any(|z| check_successive_dependence(&m, z, t).unwrap() == Verdict::Dependent)
        });
        assert!(found);
        // Even torus keeps the bipartite parity, so no state is ever occupied on two successive steps.
        let even = planar_model(4, 4, Borders::Boundless, StartKind::Deterministic(1)).unwrap();
        for t in 0..6 {
            for z in 1..=16 {
                assert_eq!(check_successive_dependence(&even, z, t).unwrap(), Verdict::Independent);
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_independence_check(0.5, 0.5, 0.25).unwrap(), (true, true));
        assert_eq!(complement_independence_check(0.5, 0.5, 0.5).unwrap(), (false, false));
        assert_eq!(
            complement_independence_check(1.0 / 6.0, 1.0 / 6.0, 0.0).unwrap(),
            (false, false)
        );
        assert!(complement_independence_check(0.5, 0.5, 0.6).is_err());
        assert!(complement_independence_check(0.8, 0.8, 0.1).is_err());
        assert!(complement_independence_check(1.2, 0.5, 0.1).is_err());
    }
}
