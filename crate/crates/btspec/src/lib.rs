//! Spectral toolkit for the Bloch-Torrey operator `-h^2 Laplacian + i x_1`.
//!
//! Closed-form semiclassical eigenvalue expansions for Dirichlet, Neumann,
//! Robin and transmission conditions, the 1D complex Airy problems behind
//! them, WKB quasimode phases, and a Galerkin discretization with a dense
//! non-Hermitian eigensolver to check the expansions against.

pub mod airy1d;
pub mod asympt;
pub mod cli;
pub mod eig;
pub mod error;
pub mod galerkin;
pub mod geometry;
pub mod specfun;
pub mod wkb;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type Cx = num_complex::Complex64;
