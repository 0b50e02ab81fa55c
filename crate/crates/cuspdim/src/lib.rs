//! Hausdorff dimension and cusp-winding spectra of generalized Schottky
//! groups on the unit disc.
//!
//! A presentation with m ≥ 1 parabolic and n ≥ 1 hyperbolic generator
//! pairs induces a boundary expanding map whose conical limit set carries
//! a countable Markov coding: hyperbolic letters and parabolic blocks
//! γ^p·h. This crate computes
//!
//! * the Hausdorff dimension of the conical limit set as the root of a
//!   pressure equation over truncated alphabets, and
//! * the cusp-winding dimension spectrum b(α), obtained by solving the
//!   implicit system {pressure = 0, ∇_q pressure = 0} with damped Newton
//!   iteration and reading the dimension off entropy/Lyapunov quotients.
//!
//! The pipeline is `schottky` (presentations and validation) → `coding`
//! (truncated alphabets, cylinder arcs) → `pressure` (weighted transfer
//! matrices, Perron data, Gibbs statistics) → `spectrum` (root solvers,
//! grids, cross-check oracles), with `cli` exposing everything as
//! subcommands. Heavy loops are data-parallel behind the `parallel`
//! feature (on by default); disabling it yields a bit-identical
//! sequential build.

pub mod cli;
pub mod coding;
pub mod error;
pub mod moebius;
pub mod parallel;
pub mod pressure;
pub mod schottky;
pub mod spectrum;

pub use coding::{Letter, TruncatedAlphabet};
pub use error::{Error, Result};
pub use moebius::{BoundaryArc, DiscIsometry, IsometryClass};
pub use parallel::Parallelism;
pub use pressure::{
    finiteness_check, gibbs_stats, letter_sum_trend, pressure, Finiteness, GibbsStats,
    PotentialParams, PressureResult, TransferSystem, TrendReport, WeightMode,
};
pub use schottky::{GroupPresentation, ValidationReport};
pub use spectrum::{
    brute_force_oracle, distortion_exponent, hausdorff_dim, periodic_orbit_stats,
    solve_spectrum_point, spectrum_grid, DimResult, DistortionFit, OracleResult, PeriodicOrbit,
    SpectrumPoint,
};
