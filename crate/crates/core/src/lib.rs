//! Minimal-cost upward-monotone paths through cost matrices.
//!
//! A path crosses an `m x n` cost matrix from left to right, one row per
//! column. From one column to the next it either stays in its row or climbs
//! one row; it never descends. Costs lie in `[0, 1]`. Climbing from row `i+1`
//! into column `j` adds `mu * (1 - S(i+1, j))`, where `S` is a logistic
//! strength of a windowed row derivative, so climbing is cheap where the row
//! being left changes sharply.
//!
//! ```
//! use monopath::{solve, CostMatrix, SolverParams};
//!
//! let c = CostMatrix::from_rows(&[[0.9, 0.9], [0.1, 0.0], [0.0, 1.0]]).unwrap();
//! let sol = solve(&c, &SolverParams::default().with_window(1)).unwrap();
//! assert_eq!(sol.result.path, vec![3, 2]);
//! ```
//!
//! Indices in the public API are 1-based with row 1 at the top.

pub mod cli;
pub mod error;
pub mod gradient;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod params;
pub mod solver;

pub use error::{Error, Result};
pub use gradient::{strength, windowed_derivative, DerivativeField, StrengthField};
pub use matrix::{CostMatrix, Grid};
pub use oracle::{brute_force_solve, enumerate_paths, path_cost, MonotonePath};
pub use params::{validate_params, SolverParams, StartMode};
pub use solver::{backtrack, forward_pass, solve, DpTables, PathResult, Solution};
