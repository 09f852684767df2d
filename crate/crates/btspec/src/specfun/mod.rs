//! Special functions, zeros, root finding and quadrature.

pub mod airy;
pub mod bessel;
pub mod ddouble;
pub mod newton;
pub mod quad;

pub use airy::{airy_ai, airy_ai_prime, airy_pair, airy_prime_zero, airy_zero};
pub use bessel::{bessel_j, bessel_jp, bessel_y, bessel_yp, BesselConfig};
pub use newton::{newton_complex, newton_complex_with, NewtonOptions, RootResult};
pub use quad::{integrate_gl, GaussLegendre};
