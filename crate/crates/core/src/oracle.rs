//! Exhaustive path enumeration and direct cost summation.
//!
//! Shares only the derivative and strength fields with the solver; path costs
//! are summed cell by cell without any table.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::gradient::{strength, windowed_derivative, StrengthField};
use crate::matrix::CostMatrix;
use crate::params::{validate_params, SolverParams, StartMode};
use crate::solver::PathResult;

/// Default upper bound on the number of paths [`enumerate_paths`] will produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// A feasible path: 1-based rows, one per column, never descending and
/// climbing at most one row per column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotonePath(Vec<usize>);

impl MonotonePath {
    /// Checks `rows` against an `m`-row matrix.
    pub fn new(rows: Vec<usize>, m: usize) -> Result<Self> {
        check_feasible(&rows, m)?;
        Ok(Self(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for MonotonePath {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

fn check_feasible(rows: &[usize], m: usize) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InfeasiblePath {
            reason: "path is empty".into(),
        });
    }
    if let Some((k, r)) = rows.iter().enumerate().find(|(_, &r)| r < 1 || r > m) {
        return Err(Error::InfeasiblePath {
            reason: format!("row {r} at column {} is outside 1..={m}", k + 1),
        });
    }
    if let Some(k) = rows
        .windows(2)
        .position(|w| !(w[0] == w[1] || w[0] == w[1] + 1))
    {
        return Err(Error::InfeasiblePath {
            reason: format!(
                "step from row {} to row {} at column {}",
                rows[k],
                rows[k + 1],
                k + 2
            ),
        });
    }
    Ok(())
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Number of feasible paths starting in 1-based row `start`.
fn count_from(start: usize, n: usize) -> u128 {
    let steps = (n - 1) as u128;
    (0..=((start - 1) as u128).min(steps))
        .map(|climbs| binomial(steps, climbs))
        .fold(0u128, u128::saturating_add)
}

/// Number of feasible paths in an `m x n` instance.
pub fn count_paths(m: usize, n: usize, start_mode: StartMode) -> u128 {
    if m == 0 || n == 0 {
        return 0;
    }
    match start_mode {
        StartMode::FreeStart => (1..=m)
            .map(|r| count_from(r, n))
            .fold(0, u128::saturating_add),
        StartMode::EnforcedBottomStart => count_from(m, n),
    }
}

/// Every feasible path of an `m x n` instance, each exactly once.
///
/// Fails with [`Error::InstanceTooLarge`] above [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_paths(m: usize, n: usize, start_mode: StartMode) -> Result<Vec<MonotonePath>> {
    enumerate_paths_capped(m, n, start_mode, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_paths_capped(
    m: usize,
    n: usize,
    start_mode: StartMode,
    cap: u128,
) -> Result<Vec<MonotonePath>> {
    if m < 2 || n < 1 {
        return Err(Error::TooSmall { rows: m, cols: n });
    }
    let count = count_paths(m, n, start_mode);
    if count > cap {
        return Err(Error::InstanceTooLarge { count, cap });
    }
    let starts = match start_mode {
        StartMode::FreeStart => 1..=m,
        StartMode::EnforcedBottomStart => m..=m,
    };
    let mut out = Vec::with_capacity(count as usize);
    let mut prefix = Vec::with_capacity(n);
    for start in starts.rev() {
        prefix.push(start);
        extend(&mut prefix, n, &mut out);
        prefix.pop();
    }
    Ok(out)
}

fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<MonotonePath>) {
    if prefix.len() == n {
        out.push(MonotonePath(prefix.clone()));
        return;
    }
    let here = *prefix.last().expect("prefix starts non-empty");
    prefix.push(here);
    extend(prefix, n, out);
    prefix.pop();
    if here > 1 {
        prefix.push(here - 1);
        extend(prefix, n, out);
        prefix.pop();
    }
}

/// Sums traversed cell costs plus `mu * (1 - S(origin row, arrival column))`
/// for every climb, left to right.
pub fn path_cost(c: &CostMatrix, s: &StrengthField, mu: f64, path: &[usize]) -> Result<f64> {
    let (m, n) = c.shape();
    if s.shape() != (m, n) {
        return Err(Error::ShapeMismatch {
            expected_rows: m,
            expected_cols: n,
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    check_feasible(path, m)?;
    if path.len() != n {
        return Err(Error::InfeasiblePath {
            reason: format!("path has {} columns, matrix has {n}", path.len()),
        });
    }
    let mut total = c.get(path[0], 1);
    for j in 2..=n {
        let (from, to) = (path[j - 2], path[j - 1]);
        if from == to + 1 {
            total += mu * (1.0 - *s.get(from, j));
        }
        total += c.get(to, j);
    }
    Ok(total)
}

/// Minimum-cost path by enumerating every feasible path.
///
/// On ties the first minimizer in enumeration order is returned.
pub fn brute_force_solve(c: &CostMatrix, params: &SolverParams) -> Result<PathResult> {
    validate_params(params, c)?;
    let d = windowed_derivative(c, params.w)?;
    let s = strength(&d, params.beta)?;
    let (m, n) = c.shape();
    let mut best: Option<PathResult> = None;
    for path in enumerate_paths(m, n, params.start_mode)? {
        let cost = path_cost(c, &s, params.mu, &path)?;
        if best.as_ref().is_none_or(|b| cost < b.total_cost) {
            best = Some(PathResult {
                path: path.into_inner(),
                total_cost: cost,
            });
        }
    }
    Ok(best.expect("at least one feasible path exists"))
}
