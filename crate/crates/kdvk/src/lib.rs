//! Pseudospectral solver and verification harness for the damped
//! Korteweg-de Vries-Kawahara equation
//!
//! ```text
//! u_t + alpha u_xxxxx + beta u_xxx + mu (u^2)_x + lambda (u^3)_x + a(x) u = 0
//! ```
//!
//! on a periodic domain, instrumented with exponentially weighted (Gevrey)
//! norms, spacetime dispersive norms, a Picard fixed-point driver, decay
//! monitors and randomized inequality probes.

pub mod error;
pub mod fft;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use scalar::Real;
pub use spectral::{
    dealias_cube, dealias_product, dispersion_symbol, spatial_derivative, transform_forward,
    transform_inverse, EquationParams, Field, GridSpec, Repr,
};

/// Concrete double-precision aliases for the generic core types.
pub type Grid64 = GridSpec<f64>;
pub type Field64 = Field<f64>;
pub type Params64 = EquationParams<f64>;

/// Entry point for the `kdvk` binary; returns the process exit code.
pub fn cli_main() -> i32 {
    eprintln!("cli not wired yet");
    1
}
