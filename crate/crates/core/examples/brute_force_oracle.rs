//! Path enumeration agrees with the absorbing-chain computation.
//!
//!     cargo run --example brute_force_oracle

use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    for borders in [Borders::Bordered, Borders::Boundless] {
        let model = ChainModel::new(GridSpec::planar(3, 3, borders)?, StartKind::Uniform)?;
        let exact = expected_coverage_exact(&model, 8);
        let brute = brute_force_coverage(&model, 8)?;
        println!("{borders:?}: max |exact - enumerated| = {:.1e}", exact.max_abs_diff(&brute));
    }

    let big = ChainModel::new(GridSpec::planar(10, 10, Borders::Bordered)?, StartKind::Uniform)?;
    match brute_force_coverage(&big, 20) {
        Err(e) => println!("10x10, 20 steps: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
