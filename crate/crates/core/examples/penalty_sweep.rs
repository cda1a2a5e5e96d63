//! Sweep the climb penalty weight and watch the path flatten.
//!
//! ```bash
//! cargo run -p monopath --example penalty_sweep
//! ```

use monopath::{solve, CostMatrix, SolverParams, StartMode};

fn main() -> monopath::Result<()> {
    // Cheaper cells sit one row higher every few columns.
    let c = CostMatrix::from_rows(&[
        [0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.2, 0.1, 0.1, 0.1, 0.2],
        [0.9, 0.9, 0.9, 0.3, 0.2, 0.2, 0.3, 0.9, 0.9, 0.9, 0.9, 0.9],
        [0.1, 0.2, 0.1, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9],
    ])?;
    println!("{:>6}  {:>8}  path", "mu", "cost");
    for mu in [0.0, 4.0, 16.0, 64.0, 256.0, 1024.0, 4096.0] {
        let params = SolverParams::default()
            .with_window(3)
            .with_mu(mu)
            .with_start_mode(StartMode::EnforcedBottomStart);
        let r = solve(&c, &params)?.result;
        let path: Vec<String> = r.path.iter().map(usize::to_string).collect();
        println!("{mu:>6}  {:>8.4}  {}", r.total_cost, path.join(" "));
    }
    Ok(())
}
