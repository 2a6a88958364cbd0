//! Seeded Monte Carlo rollouts checked against the exact curve.
//!
//!     cargo run --release --example monte_carlo

use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    let spec = GridSpec::planar(5, 5, Borders::Bordered)?;
    let model = ChainModel::new(spec, StartKind::Deterministic(spec.index_of(spec.center())?))?;
    let n_max = 50;

    let exact = expected_coverage_exact(&model, n_max);
    let sim = simulate_coverage(&SimConfig::new(&model, n_max, 200_000, 42))?;

    let mut outside = 0;
    for n in 0..=n_max {
        let diff = (sim.curve.value(n) - exact.value(n)).abs();
        if diff > 3.0 * sim.stderr[n] {
            outside += 1;
        }
        if n % 5 == 0 {
            println!(
                "n={n:>3}  exact={:.6}  mc={:.6} ± {:.6}",
                exact.value(n),
                sim.curve.value(n),
                sim.stderr[n]
            );
        }
    }
    println!("steps outside 3 stderr: {outside} of {}", n_max + 1);
    println!("max |exact - mc| = {:.2e}", exact.max_abs_diff(&sim.curve));
    Ok(())
}
