//! Numerical core for positive-energy inverse scattering in the plane.
//!
//! The crate evaluates the Faddeev Green's function `g_λ` for `E > 0`,
//! solves the Lippmann–Schwinger equation for complex geometric optics
//! (CGO) solutions on a periodized grid, and computes the scattering
//! transform `t(λ)` together with a d-bar consistency diagnostic.
//!
//! Everything here is `no_std` (with `alloc`) and single-threaded; the
//! companion `faddeev-sweep` crate adds parallel grid evaluation, caching,
//! file formats and the command line tool.
//!
//! Module map:
//!
//! * [`numerics`]: special functions, Gauss–Legendre rules, restarted GMRES, 2-D FFT.
//! * [`spectral`]: the spectral parameter `λ`, the vector `ζ` and its reduced form.
//! * [`green`]: evaluation of `g_λ(z)` anywhere in the plane and on torus grids.
//! * [`potentials`]: the radial test potentials and the norm-smallness bound.
//! * [`ls`]: the periodized Lippmann–Schwinger solver.
//! * [`scatter`]: scattering transform, Born approximation and d-bar residual.

#![no_std]
// `Float` supplies f64 math without std; when std is linked into the build
// graph its inherent methods shadow the trait and the import looks unused.
#![allow(unused_imports)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod green;
pub mod ls;
pub mod numerics;
pub mod potentials;
pub mod scatter;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64;
