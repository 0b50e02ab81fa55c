//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong, from bad configs to stalled solvers.
#[derive(Debug, Error)]
pub enum Error {
    /// An isometry whose entries violate |a|² − |b|² = 1 beyond tolerance.
    #[error("generator '{name}': |a|^2 - |b|^2 = {norm} is outside the normalization tolerance")]
    NotNormalized { name: String, norm: f64 },

    /// Isometric arcs are undefined for rotations about the origin.
    #[error("generator '{name}': isometric arc undefined (b = 0)")]
    IsometricArcUndefined { name: String },

    /// Elliptic elements have no boundary fixed points.
    #[error("generator '{name}': no boundary fixed points")]
    NoBoundaryFixedPoints { name: String },

    /// Config file could not be parsed against the schema.
    #[error("config schema error: {0}")]
    Schema(String),

    /// Presentation failed the Schottky validation checks.
    #[error("validation failed:\n{report}")]
    Validation { report: String },

    /// A word violated the admissibility rule at some junction.
    #[error("inadmissible word at junction {position}: {detail}")]
    InadmissibleWord { position: usize, detail: String },

    /// Parameters lie outside the finiteness region of the pressure.
    #[error("pressure is infinite for these parameters: {detail}")]
    InfiniteRegion { detail: String },

    /// An iterative solver hit its cap without meeting tolerance.
    #[error("{what} did not converge after {iterations} iterations (last delta {last_delta:.3e})")]
    NonConvergence {
        what: String,
        iterations: usize,
        last_delta: f64,
    },

    /// Restriction of the transfer matrix is empty or not irreducible.
    #[error("subsystem restriction is {0}")]
    BadSubsystem(&'static str),

    /// Brute-force scan found no pressure sign change on the given b grid.
    #[error("no sign change of min-q pressure on the b grid ({0})")]
    NoSignChange(String),

    /// Malformed command line or unusable input paths.
    #[error("usage error: {0}")]
    Usage(String),

    /// Underlying I/O failure while reading or writing files.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code contract: 1 validation, 2 numerical, 3 usage.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotNormalized { .. }
            | Error::IsometricArcUndefined { .. }
            | Error::NoBoundaryFixedPoints { .. }
            | Error::Schema(_)
            | Error::Validation { .. } => 1,
            Error::Usage(_) | Error::Io(_) => 3,
            _ => 2,
        }
    }
}
