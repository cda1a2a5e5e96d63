use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CostMatrix;

/// Where a path is allowed to begin.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartMode {
    /// Any row may start the path; column 1 of the cost table equals column 1 of the costs.
    #[default]
    FreeStart,
    /// The path must start in the bottom row.
    EnforcedBottomStart,
}

impl StartMode {
    pub fn as_str(self) -> &'static str {
        match self {
            StartMode::FreeStart => "free_start",
            StartMode::EnforcedBottomStart => "enforced_bottom_start",
        }
    }
}

/// Window size, decay and penalty weight for the solver.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverParams {
    /// Derivative window, in columns.
    pub w: usize,
    /// Logistic decay applied to the windowed derivative.
    pub beta: f64,
    /// Weight of the climb penalty.
    pub mu: f64,
    pub start_mode: StartMode,
}

impl SolverParams {
    pub const DEFAULT_W: usize = 5;
    pub const DEFAULT_BETA: f64 = 7.0;
    pub const DEFAULT_MU: f64 = 16.0;

    pub fn new(w: usize, beta: f64, mu: f64, start_mode: StartMode) -> Self {
        Self {
            w,
            beta,
            mu,
            start_mode,
        }
    }

    pub fn with_window(mut self, w: usize) -> Self {
        self.w = w;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }

    pub fn with_mu(mut self, mu: f64) -> Self {
        self.mu = mu;
        self
    }

    pub fn with_start_mode(mut self, start_mode: StartMode) -> Self {
        self.start_mode = start_mode;
        self
    }

    /// Checks the parameter ranges on their own, without a matrix.
    pub fn check(&self) -> Result<()> {
        if self.w == 0 {
            return Err(Error::InvalidParameter {
                name: "w",
                value: 0.0,
                reason: "window must be at least 1",
            });
        }
        check_non_negative("beta", self.beta)?;
        check_non_negative("mu", self.mu)
    }
}

impl Default for SolverParams {
    fn default() -> Self {
        Self::new(
            Self::DEFAULT_W,
            Self::DEFAULT_BETA,
            Self::DEFAULT_MU,
            StartMode::FreeStart,
        )
    }
}

pub(crate) fn check_non_negative(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and non-negative",
        });
    }
    Ok(())
}

/// Fails unless the parameters are in range and the matrix has at least `2w`
/// columns, so that at least one interior derivative column exists.
pub fn validate_params(params: &SolverParams, c: &CostMatrix) -> Result<()> {
    params.check()?;
    check_window(params.w, c.cols())
}

pub(crate) fn check_window(w: usize, n: usize) -> Result<()> {
    if w == 0 {
        return Err(Error::InvalidParameter {
            name: "w",
            value: 0.0,
            reason: "window must be at least 1",
        });
    }
    if n < 2 * w {
        return Err(Error::WindowTooLarge { w, n });
    }
    Ok(())
}
