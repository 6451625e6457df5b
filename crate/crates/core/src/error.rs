use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::numerics::SolveReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function}: argument {x} is outside the domain")]
    Domain { function: &'static str, x: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the Green's function is singular at z = 0")]
    SingularPoint,

    #[error("non-finite value encountered in {0}")]
    Numeric(&'static str),

    #[error("zeta.zeta = {found} is inconsistent with energy {energy}")]
    Inconsistent { found: Complex64, energy: f64 },

    #[error("|lambda| = {modulus} lies inside the unit-circle exclusion band (+/-{band})")]
    ExcludedParameter { modulus: f64, band: f64 },

    #[error("Im(zeta) = 0: the physical scattering regime is not supported")]
    DegenerateParameter,

    #[error("panel calibration for {variant} did not settle below {cap} points")]
    CalibrationFailed { variant: &'static str, cap: usize },

    #[error(
        "single-layer density solve did not converge: {} iterations, residual {:.3e}",
        .0.iterations,
        .0.final_residual
    )]
    SingleLayerSetup(SolveReport),

    #[error("Green's function evaluation failed at ({x1}, {x2}): {source}")]
    Node {
        x1: f64,
        x2: f64,
        source: Box<Error>,
    },

    #[error("Lippmann-Schwinger solve did not converge for lambda in {lambdas:?}")]
    Unconverged { lambdas: Vec<Complex64> },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
