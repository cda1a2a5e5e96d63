use std::io::{BufRead, BufReader, Read, Write};

use serde::{Deserialize, Serialize};

use super::format_f64;
use crate::error::{Error, Result};
use crate::gradient::{DerivativeField, StrengthField};
use crate::matrix::Grid;
use crate::params::SolverParams;
use crate::solver::{DpTables, PathResult};

/// The JSON document emitted for a solved instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathDocument {
    pub rows: usize,
    pub cols: usize,
    pub path: Vec<usize>,
    pub total_cost: f64,
    pub params: SolverParams,
}

/// Writes the path document as one line of JSON.
///
/// Floats use the shortest representation that parses back to the same `f64`.
pub fn write_path<W: Write>(
    result: &PathResult,
    rows: usize,
    params: &SolverParams,
    mut sink: W,
) -> Result<()> {
    let doc = PathDocument {
        rows,
        cols: result.path.len(),
        path: result.path.clone(),
        total_cost: result.total_cost,
        params: *params,
    };
    serde_json::to_writer(&mut sink, &doc).map_err(|e| Error::WriteFailure(e.into()))?;
    writeln!(sink).map_err(Error::WriteFailure)?;
    sink.flush().map_err(Error::WriteFailure)
}

/// Tables read back from [`write_tables`] output.
#[derive(Clone, Debug, PartialEq)]
pub struct TableDump {
    pub q: Grid<f64>,
    pub p: Grid<usize>,
    pub d: Grid<f64>,
    pub s: Grid<f64>,
}

fn write_block<W: Write, T>(
    sink: &mut W,
    label: &str,
    grid: &Grid<T>,
    fmt: impl Fn(&T) -> String,
) -> std::io::Result<()> {
    writeln!(sink, "# {label} {}x{}", grid.rows(), grid.cols())?;
    for row in grid.iter_rows() {
        let cells: Vec<String> = row.iter().map(&fmt).collect();
        writeln!(sink, "{}", cells.join(","))?;
    }
    Ok(())
}

/// Writes Q, P, D and S as labeled CSV blocks.
///
/// Each block opens with `# <label> <rows>x<cols>`; reals carry 17 significant
/// digits, predecessors are plain integers.
pub fn write_tables<W: Write>(
    t: &DpTables,
    d: &DerivativeField,
    s: &StrengthField,
    mut sink: W,
) -> Result<()> {
    let real = |v: &f64| format_f64(*v);
    (|| {
        write_block(&mut sink, "Q", &t.q, real)?;
        write_block(&mut sink, "P", &t.p, |v| v.to_string())?;
        write_block(&mut sink, "D", d, real)?;
        write_block(&mut sink, "S", s, real)?;
        sink.flush()
    })()
    .map_err(Error::WriteFailure)
}

fn read_block<T: std::str::FromStr>(
    lines: &mut impl Iterator<Item = (usize, String)>,
    label: &str,
) -> Result<Grid<T>> {
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedTables(format!("missing block {label}")))?;
    let shape = header
        .strip_prefix("# ")
        .and_then(|h| h.strip_prefix(label))
        .map(str::trim)
        .and_then(|dims| dims.split_once('x'))
        .and_then(|(r, c)| Some((r.parse::<usize>().ok()?, c.parse::<usize>().ok()?)));
    let Some((rows, cols)) = shape else {
        return Err(Error::MalformedTables(format!(
            "expected header for {label}, got {header:?}"
        )));
    };
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::MalformedTables(format!("block {label} ends early")))?;
        let start = data.len();
        for (f, token) in line.split(',').enumerate() {
            data.push(token.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                column: f + 1,
                token: token.to_string(),
            })?);
        }
        if data.len() - start != cols {
            return Err(Error::RaggedRows {
                line: line_no,
                expected: cols,
                found: data.len() - start,
            });
        }
    }
    Grid::from_vec(rows, cols, data)
}

/// Parses the four blocks written by [`write_tables`].
pub fn read_tables<R: Read>(source: R) -> Result<TableDump> {
    let mut lines = Vec::new();
    for (k, line) in BufReader::new(source).lines().enumerate() {
        lines.push((k + 1, line.map_err(Error::ReadFailure)?));
    }
    let mut it = lines.into_iter().filter(|(_, l)| !l.trim().is_empty());
    Ok(TableDump {
        q: read_block(&mut it, "Q")?,
        p: read_block(&mut it, "P")?,
        d: read_block(&mut it, "D")?,
        s: read_block(&mut it, "S")?,
    })
}
