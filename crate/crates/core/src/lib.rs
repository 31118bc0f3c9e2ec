//! Numerics for the integral
//!
//! ```text
//! I = ∫₀^∞ A(x)² ln A(x) dx,    A(x) = Ai′(x) / Ai′(0)
//! ```
//!
//! evaluated three ways: adaptive quadrature ([`quadrature`]), the
//! incomplete-Bell-polynomial series for the inverse function ([`inversion`],
//! [`bell`]) and a power-law tail acceleration of that series
//! ([`summation`]). Every series coefficient is computed twice, once through
//! Faà di Bruno / Bell polynomials and once by brute-force reversion of the
//! Maclaurin series.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::excessive_precision)]

extern crate alloc;

mod dd;
mod error;

pub mod bell;
pub mod constants;
pub mod inversion;
pub mod quadrature;
pub mod series;
pub mod specfun;
pub mod summation;

pub use bell::{bell_table, BellTable};
pub use constants::{build_constants, ConstantsTable};
pub use error::{Error, Result};
pub use inversion::{
    a_k_bell, a_k_reversion, coefficient_table, s_k, u_derivatives, CoefficientRow,
    CoefficientTable, UDerivatives,
};
pub use quadrature::{integrate_i, integrate_unit, QuadratureOptions, QuadratureResult};
pub use series::PowerSeries;
pub use specfun::{a_ratio, airy_prime, digamma_half_int, gamma_fn, AiryEvalConfig};
pub use summation::{
    accelerate, fit_tail, remainder, sigma_closed, sigma_direct, summand, weight,
    AccelerationReport, Remainder, SigmaSet, SigmaTail, TailCoefficients, TailFit, TailSource,
};

/// Largest expansion order the pipeline accepts (`k_max`).
pub const K_MAX_LIMIT: usize = 60;
