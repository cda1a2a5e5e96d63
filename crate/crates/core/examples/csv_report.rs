//! Read a CSV cost matrix (normalizing it into [0, 1]) and emit the JSON path
//! document and the Q/P/D/S table dump on standard output.
//!
//! ```bash
//! cargo run -p monopath --example csv_report
//! cargo run -p monopath --example csv_report -- costs.csv
//! ```

use std::fs::File;
use std::io::Read;

use monopath::io::{read_csv_with, write_path, write_tables, CsvOptions};
use monopath::{solve, SolverParams, StartMode};

const SAMPLE: &str = "\
12,10,9,9,8,1,0,0
3,3,2,11,12,12,10,9
0,0,14,14,15,15,15,15
";

fn main() -> monopath::Result<()> {
    let source: Box<dyn Read> = match std::env::args().nth(1) {
        Some(path) => Box::new(File::open(path).map_err(monopath::Error::ReadFailure)?),
        None => Box::new(SAMPLE.as_bytes()),
    };
    let c = read_csv_with(source, CsvOptions { normalize: true })?;
    let params = SolverParams::default()
        .with_window(2)
        .with_start_mode(StartMode::EnforcedBottomStart);
    let sol = solve(&c, &params)?;

    let stdout = std::io::stdout();
    write_path(&sol.result, c.rows(), &params, stdout.lock())?;
    println!();
    write_tables(&sol.tables, &sol.derivative, &sol.strength, stdout.lock())?;
    Ok(())
}
