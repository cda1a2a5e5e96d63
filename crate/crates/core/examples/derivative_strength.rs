//! How the windowed derivative and its logistic strength respond to a step.
//!
//! ```bash
//! cargo run -p monopath --example derivative_strength
//! ```

use monopath::{strength, windowed_derivative, CostMatrix};

fn show(label: &str, row: &[f64]) {
    let cells: Vec<String> = row.iter().map(|v| format!("{v:.3}")).collect();
    println!("{label:>10}  {}", cells.join(" "));
}

fn main() -> monopath::Result<()> {
    // Row 1 steps from 0 to 1 halfway; row 2 is a slow ramp; row 3 is flat.
    let n = 16;
    let step: Vec<f64> = (0..n).map(|j| if j < n / 2 { 0.0 } else { 1.0 }).collect();
    let ramp: Vec<f64> = (0..n).map(|j| j as f64 / (n - 1) as f64).collect();
    let flat = vec![0.4; n];
    let c = CostMatrix::from_rows(&[step, ramp, flat])?;

    for w in [1, 3] {
        let d = windowed_derivative(&c, w)?;
        println!("w = {w}");
        for i in 1..=3 {
            show(&format!("D row {i}"), d.row(i));
        }
        for beta in [0.0, 7.0] {
            let s = strength(&d, beta)?;
            println!("  beta = {beta}");
            for i in 1..=3 {
                show(&format!("S row {i}"), s.row(i));
            }
        }
        println!();
    }
    Ok(())
}
