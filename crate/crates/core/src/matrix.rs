//! Dense row-major grids and the validated cost matrix.
//!
//! All public accessors use 1-based `(row, col)` indices with row 1 at the
//! top. Storage is a flat `Vec` in row-major order.

use crate::error::{Error, Result};

/// A dense `rows x cols` grid addressed with 1-based indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Grid<T> {
    /// Wraps row-major `data`. Fails if the length is not `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows.checked_mul(cols) != Some(data.len()) {
            return Err(Error::DimensionMismatch {
                rows,
                cols,
                expected: rows.saturating_mul(cols),
                actual: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a grid by evaluating `f(row, col)` with 1-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    fn offset(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "index ({row}, {col}) out of bounds for {}x{} grid",
            self.rows,
            self.cols
        );
        (row - 1) * self.cols + (col - 1)
    }

    /// Element at 1-based `(row, col)`.
    ///
    /// Panics if the index is out of bounds.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[self.offset(row, col)]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: T) {
        let k = self.offset(row, col);
        self.data[k] = value;
    }

    /// Row `row` (1-based) as a slice.
    pub fn row(&self, row: usize) -> &[T] {
        assert!(
            (1..=self.rows).contains(&row),
            "row {row} out of bounds for {} rows",
            self.rows
        );
        let start = (row - 1) * self.cols;
        &self.data[start..start + self.cols]
    }

    /// Iterates over rows, top to bottom.
    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    /// Row-major view of all elements.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Grid<U> {
        Grid {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Copy> Grid<T> {
    /// Column `col` (1-based), top to bottom.
    pub fn column(&self, col: usize) -> Vec<T> {
        (1..=self.rows).map(|i| *self.get(i, col)).collect()
    }
}

/// An `m x n` matrix of traversal costs, every value in `[0, 1]`.
///
/// Requires `m >= 2` and `n >= 1`. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct CostMatrix {
    grid: Grid<f64>,
}

impl CostMatrix {
    /// Validates `values` (row-major, `rows * cols` entries) into a cost matrix.
    ///
    /// Reports the first value outside `[0, 1]` in row-major order; NaN counts
    /// as out of range.
    pub fn new(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
        if rows < 2 || cols < 1 {
            return Err(Error::TooSmall { rows, cols });
        }
        let grid = Grid::from_vec(rows, cols, values)?;
        if let Some(k) = grid.data.iter().position(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::ValueOutOfRange {
                row: k / cols + 1,
                col: k % cols + 1,
                value: grid.data[k],
            });
        }
        Ok(Self { grid })
    }

    /// Builds a matrix from nested rows, each of equal length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut values = Vec::with_capacity(m * n);
        for (k, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::RaggedRows {
                    line: k + 1,
                    expected: n,
                    found: r.len(),
                });
            }
            values.extend_from_slice(r);
        }
        Self::new(m, n, values)
    }

    /// An all-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows.saturating_mul(cols)])
    }

    pub fn rows(&self) -> usize {
        self.grid.rows
    }

    pub fn cols(&self) -> usize {
        self.grid.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        self.grid.shape()
    }

    /// Cost at 1-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        *self.grid.get(row, col)
    }

    pub fn row(&self, row: usize) -> &[f64] {
        self.grid.row(row)
    }

    pub fn grid(&self) -> &Grid<f64> {
        &self.grid
    }

    /// Returns the first `cols` columns as a new matrix.
    pub fn truncate_cols(&self, cols: usize) -> Result<Self> {
        let cols = cols.min(self.cols());
        let values = self
            .grid
            .iter_rows()
            .flat_map(|r| r[..cols].iter().copied())
            .collect();
        Self::new(self.rows(), cols, values)
    }
}
