//! Reading cost matrices and writing results.
//!
//! - CSV: one matrix row per line, comma separated, no header.
//! - PGM (P2/P5) in, with white mapped to cost 0 and black to cost 1.
//! - PPM (P6) overlay out, with the path drawn in a solid color.
//! - JSON path document and CSV table dumps.

mod csv;
mod pnm;
mod report;

pub use self::csv::{read_csv, read_csv_with, write_csv, CsvOptions};
pub use self::pnm::{read_pgm, render_overlay, write_pgm, OverlaySpec, PixelDepth};
pub use self::report::{read_tables, write_path, write_tables, PathDocument, TableDump};

/// Formats `v` with 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}
