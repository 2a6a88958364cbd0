//! When are the events "agent sits in cell z" at different times dependent?
//!
//!     cargo run --example dependence

use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    let spec = GridSpec::planar(3, 3, Borders::Bordered)?;
    let from_centre = ChainModel::new(spec, StartKind::Deterministic(5))?;

    for (z, m) in [(5, 0), (1, 1), (1, 2), (2, 3)] {
        let r = check_two_step_dependence(&from_centre, z, m)?;
        println!(
            "z={z} m={m}: P(X_m=z)={:.4}  lhs={:.4}  rhs={:.4}  -> {:?}",
            r.p_m, r.lhs, r.rhs, r.verdict
        );
    }

    // Uniform start on a larger grid: corners end up below 1/3.
    let spec = GridSpec::planar(4, 4, Borders::Bordered)?;
    let uniform = ChainModel::new(spec, StartKind::Uniform)?;
    let r = check_two_step_dependence(&uniform, 1, spec.state_count())?;
    println!("4x4 uniform, corner at m=16: p={:.4} -> {:?}", r.p_m, r.verdict);

    // On an odd torus the walk can come back after an odd number of steps.
    let torus = ChainModel::new(GridSpec::planar(3, 3, Borders::Boundless)?, StartKind::Deterministic(1))?;
    println!(
        "3x3 torus, z=1, t=3 vs t=4: {:?}",
        check_successive_dependence(&torus, 1, 3)?
    );

    for (a, b, ab) in [(0.5, 0.5, 0.25), (0.5, 0.5, 0.5), (1.0 / 6.0, 1.0 / 6.0, 0.0)] {
        let (events, complements) = complement_independence_check(a, b, ab)?;
        println!("P(A)={a:.3} P(B)={b:.3} P(AB)={ab:.3}: independent={events}, complements independent={complements}");
    }
    Ok(())
}
