//! Exact expected coverage against the independence-assuming product formula
//! on a 5x5 bordered grid, starting in the centre.
//!
//!     cargo run --example exact_vs_naive [steps]

use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let spec = GridSpec::planar(5, 5, Borders::Bordered)?;
    let model = ChainModel::new(spec, StartKind::Deterministic(spec.index_of(spec.center())?))?;

    let exact = expected_coverage_exact(&model, n_max);
    let naive = expected_coverage_naive(&model, n_max);

    println!("{:>4}  {:>10}  {:>10}  {:>10}", "step", "exact", "naive", "gap");
    let mut worst = (0, 0.0f64);
    for n in 0..=n_max {
        let gap = naive.value(n) - exact.value(n);
        if gap.abs() > worst.1.abs() {
            worst = (n, gap);
        }
        println!("{n:>4}  {:>10.6}  {:>10.6}  {gap:>+10.6}", exact.value(n), naive.value(n));
    }
    println!("largest gap {:+.17} at step {}", worst.1, worst.0);
    Ok(())
}
