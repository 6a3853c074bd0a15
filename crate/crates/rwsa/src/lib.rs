//! Exact symbolic-numeric engine for the heat-kernel coefficients of the
//! Dirac Laplacian on Euclidean Robertson-Walker spacetimes.
//!
//! The pipeline builds the Dirac symbol in u-coordinates, runs the parametrix
//! recursion for the torus-extended operator, reduces the traced top-order
//! symbol over the metric cosphere with exact Wallis integrals, and emits the
//! heat coefficients as exact rational polynomials together with
//! period-integral data. Independent verification paths: transcription
//! oracles, a Lichnerowicz/Gilkey curvature oracle, and numeric quadrature.

pub mod dd;
pub mod dirac;
pub mod error;
pub mod expr;
pub mod matrix;
pub mod rational;
pub mod residue;
pub mod term;

pub use error::{Result, RwsaError};

pub mod eval;
pub mod oracle;
pub mod parametrix;
