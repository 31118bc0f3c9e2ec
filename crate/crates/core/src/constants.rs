//! Irrational constants used throughout the pipeline.
//!
//! Γ(1/3), Γ(2/3), γ, Ai(0) and Ai′(0) come from 36-digit decimal literals.
//! ζ(3) and Li₄(1/2) are summed from their defining series on every build so
//! the closed-form checks in [`crate::summation`] never rest on a typed-in
//! value. Each entry has at least one cross-identity, see
//! [`ConstantsTable::check`].

use core::f64::consts::PI;

use crate::error::{Error, Result};

const GAMMA_ONE_THIRD: f64 = 2.678_938_534_707_747_633_655_692_940_974_677_64;
const GAMMA_TWO_THIRDS: f64 = 1.354_117_939_426_400_416_945_288_028_154_513_79;
pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431;
const AI_ZERO: f64 = 0.355_028_053_887_817_239_260_063_186_004_183_176;
const AI_PRIME_ZERO: f64 = -0.258_819_403_792_806_798_405_183_560_189_203_963;

/// Relative tolerance for the cross-identities.
pub const IDENTITY_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstantsTable {
    pub gamma_one_third: f64,
    pub gamma_two_thirds: f64,
    pub euler_gamma: f64,
    pub zeta3: f64,
    pub li4_half: f64,
    /// Ai(0).
    pub ai0: f64,
    /// Ai′(0), negative.
    pub aip0: f64,
    /// u(0) = lim (1 − A(x))/x², dimensionless.
    pub u0: f64,
}

fn rel_gap(a: f64, b: f64) -> f64 {
    libm::fabs(a - b) / libm::fabs(b)
}

/// ζ(3) by direct summation of Σ n⁻³ up to N−1, with the Euler–Maclaurin
/// tail Σ_{n≥N} n⁻³ = 1/(2N²) + 1/(2N³) + 1/(4N⁴) − 1/(12N⁶) + 1/(12N⁸) − …
pub fn zeta3_series() -> f64 {
    const N: u32 = 64;
    let n = N as f64;
    let tail = 1.0 / (2.0 * n * n) + 1.0 / (2.0 * n * n * n) + 1.0 / (4.0 * libm::pow(n, 4.0))
        - 1.0 / (12.0 * libm::pow(n, 6.0))
        + 1.0 / (12.0 * libm::pow(n, 8.0));
    // smallest terms first
    (1..N).rev().fold(tail, |acc, k| {
        let k = k as f64;
        acc + 1.0 / (k * k * k)
    })
}

/// Li₄(1/2) = Σ 2⁻ⁿ/n⁴, summed until the terms drop below the last ulp.
pub fn li4_half_series() -> f64 {
    const N: i32 = 64;
    (1..=N).rev().fold(0.0, |acc, k| {
        let kf = k as f64;
        acc + libm::ldexp(1.0, -k) / (kf * kf * kf * kf)
    })
}

pub fn build_constants() -> ConstantsTable {
    let table = ConstantsTable {
        gamma_one_third: GAMMA_ONE_THIRD,
        gamma_two_thirds: GAMMA_TWO_THIRDS,
        euler_gamma: EULER_GAMMA,
        zeta3: zeta3_series(),
        li4_half: li4_half_series(),
        ai0: AI_ZERO,
        aip0: AI_PRIME_ZERO,
        u0: -AI_ZERO / (2.0 * AI_PRIME_ZERO),
    };
    debug_assert!(table.check().is_ok(), "{:?}", table.check());
    table
}

impl ConstantsTable {
    /// u(0) from the Gamma-function form π / (3^(5/6) Γ(2/3)²).
    pub fn u0_from_gamma(&self) -> f64 {
        PI / (libm::pow(3.0, 5.0 / 6.0) * self.gamma_two_thirds * self.gamma_two_thirds)
    }

    /// Verifies every cross-identity at [`IDENTITY_TOL`].
    pub fn check(&self) -> Result<()> {
        let sqrt3 = libm::sqrt(3.0);
        if rel_gap(self.gamma_one_third * self.gamma_two_thirds, 2.0 * PI / sqrt3) > IDENTITY_TOL {
            return Err(Error::Internal("Γ(1/3)Γ(2/3) ≠ 2π/√3"));
        }
        if rel_gap(self.ai0, libm::pow(3.0, -2.0 / 3.0) / self.gamma_two_thirds) > IDENTITY_TOL {
            return Err(Error::Internal("Ai(0) ≠ 3^(-2/3)/Γ(2/3)"));
        }
        if rel_gap(self.aip0, -libm::pow(3.0, -1.0 / 3.0) / self.gamma_one_third) > IDENTITY_TOL {
            return Err(Error::Internal("Ai′(0) ≠ -3^(-1/3)/Γ(1/3)"));
        }
        if rel_gap(self.u0, self.u0_from_gamma()) > IDENTITY_TOL {
            return Err(Error::Internal("u(0) routes disagree"));
        }
        if !(self.aip0 < 0.0 && self.u0 > 0.0) {
            return Err(Error::Internal("sign of Ai′(0) or u(0)"));
        }
        Ok(())
    }
}
