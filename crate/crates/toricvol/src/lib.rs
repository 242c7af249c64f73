//! Exact-arithmetic convex geometry for Q-Gorenstein toric singularities.
//!
//! The crate computes normalized volumes of toric singularities through the
//! correspondence with Santaló points and non-symmetric Mahler volumes of
//! lattice polytopes. Everything in the geometry core runs over arbitrary
//! precision rationals; floating point appears only in reports.
//!
//! Module map:
//! * [`rat`] / [`linalg`] / [`lp`] / [`real`] — exact scalars, vectors,
//!   integer lattice algebra (HNF), rational LP feasibility, and the few
//!   high-precision real quantities (π powers, square roots).
//! * [`polytope`] — hulls, polar duals, volumes, barycenters, triangulations,
//!   unimodular normal forms.
//! * [`santalo`] — the polar-volume objective, its gradient, and the damped
//!   Newton solver for the Santaló point.
//! * [`toric`] — cones, Gorenstein data, height polytopes, truncated-cone
//!   volumes and the normalized volume.
//! * [`bounds`] — Radon partitions and the inequality verifiers.
//! * [`enumerate`] — classification of low-dimensional singularities above a
//!   volume threshold.
//! * [`io`] — JSON/CSV surface shared by the CLI.

pub mod bounds;
pub mod enumerate;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rat;
pub mod real;
pub mod santalo;
pub mod toric;

use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the geometry
/// core so the CLI can emit stable machine-readable codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("DegenerateInput: {0}")]
    DegenerateInput(String),
    #[error("OriginNotInterior: {0}")]
    OriginNotInterior(String),
    #[error("NotLattice: {0}")]
    NotLattice(String),
    #[error("NotPointed: {0}")]
    NotPointed(String),
    #[error("NotFullDimensional: {0}")]
    NotFullDimensional(String),
    #[error("NotQGorenstein: {0}")]
    NotQGorenstein(String),
    #[error("AmbiguousU: {0}")]
    AmbiguousU(String),
    #[error("ToleranceNotReached: {0}")]
    ToleranceNotReached(String),
    #[error("Unbounded: {0}")]
    Unbounded(String),
    #[error("WrongCount: {0}")]
    WrongCount(String),
    #[error("DegenerateSpan: {0}")]
    DegenerateSpan(String),
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("Unsupported: {0}")]
    Unsupported(String),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("Io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable one-word code for machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::OriginNotInterior(_) => "OriginNotInterior",
            Error::NotLattice(_) => "NotLattice",
            Error::NotPointed(_) => "NotPointed",
            Error::NotFullDimensional(_) => "NotFullDimensional",
            Error::NotQGorenstein(_) => "NotQGorenstein",
            Error::AmbiguousU(_) => "AmbiguousU",
            Error::ToleranceNotReached(_) => "ToleranceNotReached",
            Error::Unbounded(_) => "Unbounded",
            Error::WrongCount(_) => "WrongCount",
            Error::DegenerateSpan(_) => "DegenerateSpan",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::Unsupported(_) => "Unsupported",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
