//! Shared numerical kernels.
//!
//! All routines are pure functions of their inputs. The FFT convention is
//! fixed crate-wide: the forward transform is unscaled and the inverse is
//! scaled by `1/N²`, so `ifft2(fft2(f)) = f`.

mod fft;
mod gmres;
mod quadrature;
mod special;

pub use fft::{fft2, ifft2, Fft2};
pub use gmres::{gmres_solve, GmresOptions, SolveReport};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use special::{bessel_j0, bessel_y0, expint_e1, hankel1_0, EULER_GAMMA};
