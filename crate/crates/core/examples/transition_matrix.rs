//! Prints the transition matrix of the bordered walk on a 3x3 grid, then the
//! same matrix with the centre cell made absorbing.
//!
//!     cargo run --example transition_matrix

use gridwalk::io::matrix_to_csv;
use gridwalk::prelude::*;

fn main() -> gridwalk::Result<()> {
    let spec = GridSpec::planar(3, 3, Borders::Bordered)?;
    let p = build_chain(&spec);
    println!("bordered 3x3:\n{}", matrix_to_csv(&p));

    let centre = spec.index_of(spec.center())?;
    let absorbing = make_absorbing(&p, centre)?;
    println!("absorbing in state {centre}:\n{}", matrix_to_csv(&absorbing));

    let torus = build_chain(&GridSpec::planar(3, 3, Borders::Boundless)?);
    println!("boundless 3x3:\n{}", matrix_to_csv(&torus));
    Ok(())
}
