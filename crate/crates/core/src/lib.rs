//! Deciding pretty good fractional revival in Laplacian quantum walks.
//!
//! The continuous-time quantum walk on a graph evolves under `U(t) = exp(-itL)`
//! with `L` the graph Laplacian. This crate decides, with exact integer
//! certificates, whether a vertex pair admits (proper) pretty good fractional
//! revival or pretty good state transfer, for paths and double stars, and
//! cross-validates the certificates against closed-form classifiers and a
//! numeric walk simulator.
//!
//! Layout:
//! - [`graph`]: path / double-star construction and integer Laplacians.
//! - [`exact`]: big-integer polynomials, cyclotomics, HNF kernels and
//!   algebraic numbers (surds, cubic roots, cyclotomic elements).
//! - [`spectral`]: closed-form spectra, a Jacobi eigensolver, `U(t)`.
//! - [`support`]: strong cospectrality and eigenvalue support partitions,
//!   plus exact relation lattices over the supported eigenvalues.
//! - [`certify`]: the gcd decision procedure, closed-form classifiers and
//!   explicit negative witnesses.
//! - [`dynamics`]: revival metrics, leakage search and phase alignment.

pub mod certify;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod graph;
pub mod spectral;
pub mod support;

pub use error::{Error, Result};
