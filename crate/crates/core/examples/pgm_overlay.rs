//! Read a grayscale strip, solve with the default parameters and draw the path.
//!
//! With no argument a synthetic 3-row strip is generated: a dark band that
//! climbs from the bottom row to the top. Output goes to `overlay.ppm` in the
//! system temp directory unless a second argument names a file.
//!
//! ```bash
//! cargo run -p monopath --example pgm_overlay
//! cargo run -p monopath --example pgm_overlay -- strip.pgm out.ppm
//! ```

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use monopath::io::{read_pgm, render_overlay, write_pgm, OverlaySpec, PixelDepth};
use monopath::{solve, CostMatrix, SolverParams};

/// White background with a dark band through rows 3, 2, 1 in turn.
fn synthetic_strip(n: usize) -> monopath::Result<Vec<u8>> {
    let band = |j: usize| 3 - (3 * j / n);
    let values: Vec<f64> = (1..=3)
        .flat_map(|i| (0..n).map(move |j| if i == band(j) { 0.1 } else { 0.8 }))
        .collect();
    let mut pgm = Vec::new();
    write_pgm(&CostMatrix::new(3, n, values)?, PixelDepth::Eight, &mut pgm)?;
    Ok(pgm)
}

fn main() -> monopath::Result<()> {
    let mut args = std::env::args().skip(1);
    let c = match args.next() {
        Some(path) => read_pgm(File::open(path).map_err(monopath::Error::ReadFailure)?)?,
        None => read_pgm(synthetic_strip(60)?.as_slice())?,
    };
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("overlay.ppm"));

    let sol = solve(&c, &SolverParams::default())?;
    let sink = BufWriter::new(File::create(&out).map_err(monopath::Error::WriteFailure)?);
    render_overlay(&OverlaySpec::new(&c, &sol.result.path), sink)?;

    println!(
        "{}x{} strip, cost {:.4}",
        c.rows(),
        c.cols(),
        sol.result.total_cost
    );
    println!("climbs at columns {:?}", sol.result.up_moves());
    println!("overlay written to {}", out.display());
    Ok(())
}
