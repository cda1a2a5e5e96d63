//! Windowed row derivative and its logistic strength.
//!
//! For an interior column `j` in `w+1 ..= n-w+1` the derivative is the mean
//! absolute difference between the forward window `j .. j+w-1` and the
//! backward window `j-w .. j-1`, compared position by position. Columns
//! outside that range copy the nearest interior column.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::matrix::{CostMatrix, Grid};
use crate::params::{check_non_negative, check_window};

/// Non-negative windowed derivative, same shape as the source costs.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeField(Grid<f64>);

/// Logistic strength of the derivative, every entry in `[1/2, 1]`.
///
/// In exact arithmetic the upper end is open; in `f64` the logistic rounds to
/// exactly 1 once `beta * D` exceeds roughly 37.
#[derive(Clone, Debug, PartialEq)]
pub struct StrengthField(Grid<f64>);

impl Deref for DerivativeField {
    type Target = Grid<f64>;
    fn deref(&self) -> &Grid<f64> {
        &self.0
    }
}

impl Deref for StrengthField {
    type Target = Grid<f64>;
    fn deref(&self) -> &Grid<f64> {
        &self.0
    }
}

impl DerivativeField {
    pub fn into_grid(self) -> Grid<f64> {
        self.0
    }
}

impl StrengthField {
    /// Wraps externally computed strengths, checking every entry lies in `[1/2, 1]`.
    pub fn from_grid(grid: Grid<f64>) -> Result<Self> {
        if let Some(k) = grid
            .as_slice()
            .iter()
            .position(|v| !(0.5..=1.0).contains(v))
        {
            let cols = grid.cols();
            return Err(Error::ValueOutOfRange {
                row: k / cols + 1,
                col: k % cols + 1,
                value: grid.as_slice()[k],
            });
        }
        Ok(Self(grid))
    }

    /// A constant field, useful when the penalty should not depend on the costs.
    pub fn constant(rows: usize, cols: usize, value: f64) -> Result<Self> {
        Self::from_grid(Grid::from_fn(rows, cols, |_, _| value))
    }

    pub fn into_grid(self) -> Grid<f64> {
        self.0
    }
}

/// Computes the windowed derivative of every row of `c`.
///
/// Fails with [`Error::WindowTooLarge`] when `n < 2w`.
pub fn windowed_derivative(c: &CostMatrix, w: usize) -> Result<DerivativeField> {
    let (m, n) = c.shape();
    check_window(w, n)?;
    let first = w + 1;
    let last = n - w + 1;
    let mut data = Vec::with_capacity(m * n);
    for row in c.grid().iter_rows() {
        // 0-based: interior column j (1-based) compares row[j-1+k] with row[j-1-w+k].
        let interior: Vec<f64> = (first..=last)
            .map(|j| {
                let forward = &row[j - 1..j - 1 + w];
                let backward = &row[j - 1 - w..j - 1];
                let sum: f64 = forward
                    .iter()
                    .zip(backward)
                    .map(|(a, b)| (a - b).abs())
                    .sum();
                sum / w as f64
            })
            .collect();
        let lead = interior[0];
        let tail = interior[interior.len() - 1];
        data.extend(std::iter::repeat_n(lead, first - 1));
        data.extend_from_slice(&interior);
        data.extend(std::iter::repeat_n(tail, n - last));
    }
    Ok(DerivativeField(Grid::from_vec(m, n, data)?))
}

/// Logistic squashing `1 / (1 + exp(-beta * D))`, applied element-wise.
pub fn strength(d: &DerivativeField, beta: f64) -> Result<StrengthField> {
    check_non_negative("beta", beta)?;
    Ok(StrengthField(d.map(|&v| logistic(beta, v))))
}

#[inline]
pub(crate) fn logistic(beta: f64, d: f64) -> f64 {
    1.0 / (1.0 + (-beta * d).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_rows(row: &[f64]) -> CostMatrix {
        CostMatrix::from_rows(&[row, row]).unwrap()
    }

    #[test]
    fn unit_window_spike() {
        let d = windowed_derivative(&two_rows(&[0.0, 1.0, 0.0]), 1).unwrap();
        assert_eq!(d.row(1), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn width_two_step() {
        let d = windowed_derivative(&two_rows(&[0.0, 0.0, 1.0, 1.0]), 2).unwrap();
        assert_eq!(d.row(1), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn constant_row_is_flat() {
        let d = windowed_derivative(&two_rows(&[0.3; 12]), 3).unwrap();
        assert!(d.as_slice().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn replication_fills_edges() {
        // n = 7, w = 2: interior columns 3..=6.
        let c = CostMatrix::from_rows(&[
            [0.0, 0.2, 0.9, 0.1, 0.5, 0.5, 1.0],
            [1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        let d = windowed_derivative(&c, 2).unwrap();
        for i in 1..=2 {
            assert_eq!(d.get(i, 1), d.get(i, 3));
            assert_eq!(d.get(i, 2), d.get(i, 3));
            assert_eq!(d.get(i, 7), d.get(i, 6));
        }
        // Row 2, column 4: forward [0, 0] vs backward [1, 1].
        assert_eq!(*d.get(2, 4), 1.0);
        // Row 2, column 3: forward [1, 0] vs backward [1, 1].
        assert_eq!(*d.get(2, 3), 0.5);
    }

    #[test]
    fn window_too_large() {
        assert!(matches!(
            windowed_derivative(&two_rows(&[0.0; 9]), 5),
            Err(Error::WindowTooLarge { w: 5, n: 9 })
        ));
    }

    #[test]
    fn strength_values() {
        let d = windowed_derivative(&two_rows(&[0.0, 1.0, 0.0]), 1).unwrap();
        let s = strength(&d, 7.0).unwrap();
        assert!((s.get(1, 1) - 0.999_088_948_805_599_4).abs() < 1e-15);
        let flat = strength(&d, 0.0).unwrap();
        assert!(flat.as_slice().iter().all(|&v| v == 0.5));
        let zero = windowed_derivative(&two_rows(&[0.4; 4]), 2).unwrap();
        assert!(strength(&zero, 7.0)
            .unwrap()
            .as_slice()
            .iter()
            .all(|&v| v == 0.5));
    }

    #[test]
    fn strength_rejects_negative_beta() {
        let d = windowed_derivative(&two_rows(&[0.0, 1.0]), 1).unwrap();
        assert!(strength(&d, -1.0).is_err());
    }

    #[test]
    fn strength_field_validation() {
        assert!(StrengthField::constant(3, 2, 0.75).is_ok());
        assert!(StrengthField::constant(3, 2, 0.4).is_err());
    }
}
