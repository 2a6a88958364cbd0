//! Three-dimensional grids: sequencing, neighbours and coverage.
//!
//!     cargo run --example cube_3d

use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    let spec = GridSpec::new(4, 5, 3, Borders::Bordered)?;
    let c = Coord::new(2, 3, 1);
    println!("{c:?} -> state {}", spec.index_of(c)?);
    println!("state 21 -> {:?}", spec.coord_of(21)?);
    println!("neighbours of state 26: {:?}", spec.neighbors(26)?);

    for borders in [Borders::Bordered, Borders::Boundless] {
        let spec = GridSpec::new(4, 4, 4, borders)?;
        let model = ChainModel::new(spec, StartKind::Deterministic(spec.index_of(spec.center())?))?;
        let curve = expected_coverage_exact(&model, 100);
        println!(
            "{borders:?} 4x4x4 from centre: coverage after 25/50/100 steps = {:.4} / {:.4} / {:.4}",
            curve.value(25),
            curve.value(50),
            curve.value(100)
        );
    }
    Ok(())
}
