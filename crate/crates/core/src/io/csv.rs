use std::io::{Read, Write};

use super::format_f64;
use crate::error::{Error, Result};
use crate::matrix::CostMatrix;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CsvOptions {
    /// Min-max rescale the values into `[0, 1]` instead of rejecting
    /// out-of-range input. A constant input becomes all zeros.
    pub normalize: bool,
}

/// Reads a strict CSV cost matrix; every value must already lie in `[0, 1]`.
pub fn read_csv<R: Read>(source: R) -> Result<CostMatrix> {
    read_csv_with(source, CsvOptions::default())
}

pub fn read_csv_with<R: Read>(mut source: R, options: CsvOptions) -> Result<CostMatrix> {
    let mut text = String::new();
    source
        .read_to_string(&mut text)
        .map_err(Error::ReadFailure)?;

    let mut values = Vec::new();
    let mut rows = 0;
    let mut cols = 0;
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        if line.trim().is_empty() {
            continue;
        }
        let start = values.len();
        for (f, token) in line.split(',').enumerate() {
            let token = token.trim();
            let v: f64 = token
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    column: f + 1,
                    token: token.to_string(),
                })?;
            values.push(v);
        }
        let found = values.len() - start;
        if rows == 0 {
            cols = found;
        } else if found != cols {
            return Err(Error::RaggedRows {
                line: line_no,
                expected: cols,
                found,
            });
        }
        rows += 1;
    }
    if rows == 0 {
        return Err(Error::EmptyInput);
    }
    if options.normalize {
        normalize(&mut values);
    }
    CostMatrix::new(rows, cols, values)
}

fn normalize(values: &mut [f64]) {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let range = hi - lo;
    for v in values.iter_mut() {
        *v = if range > 0.0 {
            ((*v - lo) / range).clamp(0.0, 1.0)
        } else {
            0.0
        };
    }
}

/// Writes the matrix as CSV with 17 significant digits per value.
pub fn write_csv<W: Write>(c: &CostMatrix, mut sink: W) -> Result<()> {
    for row in c.grid().iter_rows() {
        let line: Vec<String> = row.iter().map(|&v| format_f64(v)).collect();
        writeln!(sink, "{}", line.join(",")).map_err(Error::WriteFailure)?;
    }
    sink.flush().map_err(Error::WriteFailure)
}
