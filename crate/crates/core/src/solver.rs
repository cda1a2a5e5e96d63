//! Forward accumulation of path costs and predecessor rows, then backtracking.
//!
//! A path visits one row per column, left to right, and from column `j-1` to
//! column `j` either stays in its row or climbs exactly one row. A climb into
//! `(i, j)` from row `i+1` costs `mu * (1 - S(i+1, j))` on top of the cell
//! costs, so climbs are cheap where the row being left changes sharply.

use crate::error::{Error, Result};
use crate::gradient::{strength, windowed_derivative, DerivativeField, StrengthField};
use crate::matrix::{CostMatrix, Grid};
use crate::params::{check_non_negative, validate_params, SolverParams, StartMode};

/// Accumulated costs `q` and predecessor rows `p`.
///
/// `q(i, j)` is the cheapest cost of any feasible prefix ending at `(i, j)`;
/// `p(i, j)` is the row that prefix occupies in column `j-1`. Column 1 of `p`
/// holds each row's own index.
#[derive(Clone, Debug, PartialEq)]
pub struct DpTables {
    pub q: Grid<f64>,
    pub p: Grid<usize>,
}

impl DpTables {
    pub fn rows(&self) -> usize {
        self.q.rows()
    }

    pub fn cols(&self) -> usize {
        self.q.cols()
    }
}

/// A recovered path, one 1-based row per column, and its total cost.
#[derive(Clone, Debug, PartialEq)]
pub struct PathResult {
    pub path: Vec<usize>,
    pub total_cost: f64,
}

impl PathResult {
    /// Columns (1-based) at which the path climbs one row on arrival.
    pub fn up_moves(&self) -> Vec<usize> {
        self.path
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1] + 1)
            .map(|(k, _)| k + 2)
            .collect()
    }
}

/// Everything a solve produces, kept for inspection and emission.
#[derive(Clone, Debug)]
pub struct Solution {
    pub result: PathResult,
    pub tables: DpTables,
    pub derivative: DerivativeField,
    pub strength: StrengthField,
}

/// Fills the cost and predecessor tables column by column.
///
/// Ties between staying and climbing resolve to staying. Under
/// [`StartMode::EnforcedBottomStart`] every row but the bottom one starts at
/// `+inf`, which never wins a comparison against a finite cost.
pub fn forward_pass(
    c: &CostMatrix,
    s: &StrengthField,
    mu: f64,
    start_mode: StartMode,
) -> Result<DpTables> {
    let (m, n) = c.shape();
    if s.shape() != (m, n) {
        return Err(Error::ShapeMismatch {
            expected_rows: m,
            expected_cols: n,
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    check_non_negative("mu", mu)?;

    let mut q = Grid::from_fn(m, n, |_, _| 0.0);
    let mut p = Grid::from_fn(m, n, |i, _| i);
    for i in 1..=m {
        let start = match start_mode {
            StartMode::FreeStart => c.get(i, 1),
            StartMode::EnforcedBottomStart if i == m => c.get(i, 1),
            StartMode::EnforcedBottomStart => f64::INFINITY,
        };
        q.set(i, 1, start);
    }

    for j in 2..=n {
        for i in 1..m {
            let stay = *q.get(i, j - 1);
            let climb = *q.get(i + 1, j - 1) + mu * (1.0 - *s.get(i + 1, j));
            let (best, pred) = if stay <= climb {
                (stay, i)
            } else {
                (climb, i + 1)
            };
            p.set(i, j, pred);
            q.set(i, j, best + c.get(i, j));
        }
        let bottom = *q.get(m, j - 1) + c.get(m, j);
        q.set(m, j, bottom);
        p.set(m, j, m);
    }
    Ok(DpTables { q, p })
}

/// Recovers the optimal path from completed tables.
///
/// The final row is the topmost minimizer of the last column of `q`; earlier
/// rows follow the predecessor table.
pub fn backtrack(t: &DpTables) -> PathResult {
    let (m, n) = t.q.shape();
    let mut end = 1;
    for i in 2..=m {
        if *t.q.get(i, n) < *t.q.get(end, n) {
            end = i;
        }
    }
    let mut path = vec![0; n];
    path[n - 1] = end;
    for j in (1..n).rev() {
        path[j - 1] = *t.p.get(path[j], j + 1);
    }
    PathResult {
        path,
        total_cost: *t.q.get(end, n),
    }
}

/// Runs the whole pipeline: derivative, strength, forward pass, backtrack.
pub fn solve(c: &CostMatrix, params: &SolverParams) -> Result<Solution> {
    validate_params(params, c)?;
    let derivative = windowed_derivative(c, params.w)?;
    let strength = strength(&derivative, params.beta)?;
    let tables = forward_pass(c, &strength, params.mu, params.start_mode)?;
    let result = backtrack(&tables);
    Ok(Solution {
        result,
        tables,
        derivative,
        strength,
    })
}
