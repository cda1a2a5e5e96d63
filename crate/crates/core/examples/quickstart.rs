//! Solve a small 3-row instance and print the path, its cost and the tables.
//!
//! ```bash
//! cargo run -p monopath --example quickstart
//! ```

use monopath::{solve, CostMatrix, SolverParams};

fn main() -> monopath::Result<()> {
    let c = CostMatrix::from_rows(&[
        [0.9, 0.9, 0.8, 0.1, 0.0, 0.0],
        [0.1, 0.0, 0.1, 0.9, 0.9, 0.8],
        [0.0, 1.0, 0.9, 0.9, 1.0, 1.0],
    ])?;
    let params = SolverParams::default().with_window(2);
    let sol = solve(&c, &params)?;

    println!("path       {:?}", sol.result.path);
    println!("total cost {:.6}", sol.result.total_cost);
    println!("climbs at  {:?}", sol.result.up_moves());
    println!();
    println!("accumulated cost Q / predecessor P:");
    for i in 1..=c.rows() {
        let q: Vec<String> = sol
            .tables
            .q
            .row(i)
            .iter()
            .map(|v| format!("{v:8.4}"))
            .collect();
        println!("  {}   {:?}", q.join(" "), sol.tables.p.row(i));
    }
    Ok(())
}
