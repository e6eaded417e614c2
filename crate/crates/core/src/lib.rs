//! Solvers for k-center, k-supplier, and non-uniform k-center, built around
//! parameterized feasibility search, together with exact desk-scale oracles,
//! instance generators, and text I/O.
//!
//! The solver surface:
//! - [`supplier::solve_ksupplier`] / [`supplier::solve_kcenter`]: `(1+eps)`
//!   approximations via filtering, balanced separators, and guess-and-recurse.
//! - [`nukc_general::solve_nukc_general`]: FPT 3-approximation in any metric
//!   (2-approximation when clients and facilities coincide).
//! - [`nukc_euclidean::solve_nukc_euclidean`]: `(1+eps)` scheme for Euclidean
//!   non-uniform k-center via enclosing-ball witness growth.
//! - [`oracles`]: guarded exhaustive references used throughout the tests.

pub mod filtering;
pub mod geometry;
pub mod instances;
pub mod limits;
pub mod nukc_euclidean;
pub mod nukc_general;
pub mod oracles;
pub mod separator;
pub mod supplier;

pub use geometry::{Ball, DistanceMatrix, Metric, Point};
pub use nukc_general::{BallCenter, NUkCInstance, NUkCSolution, PlacedBall};
pub use supplier::{KSupplierInstance, SolveReport, SolveStats, SolverConfig};
