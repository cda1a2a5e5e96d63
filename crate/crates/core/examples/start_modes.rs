//! Free start versus a path forced to begin in the bottom row.
//!
//! ```bash
//! cargo run -p monopath --example start_modes
//! ```

use monopath::{solve, CostMatrix, SolverParams, StartMode};

fn main() -> monopath::Result<()> {
    // The top row is cheap everywhere, so a free start just stays there.
    let c = CostMatrix::from_rows(&[
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.5, 0.5, 0.5, 0.2, 0.2, 0.2, 0.2, 0.2],
        [0.3, 0.3, 0.3, 0.3, 0.9, 0.9, 0.9, 0.9],
    ])?;
    for mode in [StartMode::FreeStart, StartMode::EnforcedBottomStart] {
        let params = SolverParams::default().with_window(2).with_start_mode(mode);
        let sol = solve(&c, &params)?;
        println!(
            "{:<22} path {:?} cost {:.4}",
            mode.as_str(),
            sol.result.path,
            sol.result.total_cost
        );
    }
    Ok(())
}
