//! Expected coverage for several independently moving agents.
//!
//!     cargo run --example multi_uav

use gridwalk::coverage::expected_coverage_multi_many;
use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    let spec = GridSpec::planar(8, 8, Borders::Bordered)?;
    let model = ChainModel::new(spec, StartKind::Uniform)?;
    let ks = [1, 2, 4, 8];
    let curves = expected_coverage_multi_many(&model, 60, &ks)?;

    print!("step");
    for k in ks {
        print!("  {:>8}", format!("k={k}"));
    }
    println!();
    for n in (0..=60).step_by(5) {
        print!("{n:>4}");
        for c in &curves {
            print!("  {:>8.4}", c.value(n));
        }
        println!();
    }
    Ok(())
}
