//! Inverse of z(x) = 1 − A(x) as a series in √z, computed two ways.
//!
//! Writing z = x² u(x), the inverse is x = Σ_k (a_k/k!) (√z)^k with
//! a_k = d^(k−1)/dx^(k−1) [u(x)^(−k/2)] at x = 0. The Bell route expands that
//! derivative by Faà di Bruno in the derivatives u^(i)(0), which have a
//! closed Gamma-function form. The reversion route never touches that form:
//! it builds u from the Airy recurrence and reverts w(x) = x √u(x) as a
//! formal power series.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::bell::{bell_table, BellTable};
use crate::constants::{build_constants, ConstantsTable};
use crate::error::{Error, Result};
use crate::series::PowerSeries;
use crate::specfun::gamma_fn;
use crate::summation::{summand, weight};
use crate::K_MAX_LIMIT;

/// u(0) and the derivatives u^(i)(0), i ≥ 1, in raw and reduced form.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UDerivatives {
    pub u0: f64,
    /// û^(i)(0) at index i − 1.
    pub u_hat: Vec<f64>,
    /// u^(i)(0) at index i − 1.
    pub raw_u: Vec<f64>,
}

impl UDerivatives {
    pub fn i_max(&self) -> usize {
        self.u_hat.len()
    }

    /// û^(i)(0), i ≥ 1.
    pub fn u_hat(&self, i: usize) -> f64 {
        self.u_hat[i - 1]
    }

    /// u^(i)(0), i ≥ 1.
    pub fn raw_u(&self, i: usize) -> f64 {
        self.raw_u[i - 1]
    }
}

/// sin(2π m/3) resolved by residue so multiples of 3 give an exact zero.
fn sin_two_thirds_pi(m: usize) -> f64 {
    let half_sqrt3 = 0.5 * libm::sqrt(3.0);
    match m % 3 {
        0 => 0.0,
        1 => half_sqrt3,
        _ => -half_sqrt3,
    }
}

/// Scale between raw and reduced derivatives: u^(i)(0) = scale · 3^(i/3) · û^(i)(0).
pub fn raw_scale(c: &ConstantsTable) -> f64 {
    2.0 / (libm::pow(3.0, 5.0 / 6.0) * c.gamma_two_thirds)
}

/// û^(i)(0) = Γ((i+1)/3) sin(2(i+1)π/3) / (i+2) for i = 1..=i_max, with
/// u^(i)(0) = [2/(3^(5/6)Γ(2/3))] 3^(i/3) û^(i)(0).
pub fn u_derivatives(c: &ConstantsTable, i_max: usize) -> Result<UDerivatives> {
    if i_max == 0 {
        return Err(Error::Argument("u_derivatives: i_max must be at least 1"));
    }
    let scale = raw_scale(c);
    let mut u_hat = Vec::with_capacity(i_max);
    let mut raw_u = Vec::with_capacity(i_max);
    for i in 1..=i_max {
        let s = sin_two_thirds_pi(i + 1);
        let uh = if s == 0.0 { 0.0 } else { gamma_fn((i + 1) as f64 / 3.0)? * s / (i + 2) as f64 };
        u_hat.push(uh);
        raw_u.push(scale * libm::pow(3.0, i as f64 / 3.0) * uh);
    }
    Ok(UDerivatives { u0: c.u0, u_hat, raw_u })
}

/// Σ_{p=0}^{k−1} r^p (k/2)_p B_{k−1,p}, with the Pochhammer symbol as a
/// running product. B_{k−1,0} vanishes except at k = 1, so starting at p = 0
/// or p = 1 only matters for the first coefficient.
fn pochhammer_bell_sum(k: usize, ratio: f64, bt: &BellTable) -> f64 {
    let half_k = k as f64 / 2.0;
    let mut poch = 1.0;
    let mut power = 1.0;
    let mut acc = 0.0;
    for p in 0..k {
        acc += power * poch * bt.get(k - 1, p);
        poch *= half_k + p as f64;
        power *= ratio;
    }
    acc
}

/// a_k = u(0)^(−k/2) Σ_p (−1/u(0))^p (k/2)_p B_{k−1,p}(u^(1)(0), …) with `bt`
/// built from the raw derivatives. a₁ = u(0)^(−1/2).
pub fn a_k_bell(k: usize, ud: &UDerivatives, bt: &BellTable) -> Result<f64> {
    if k == 0 || k > bt.n_max() + 1 {
        return Err(Error::Argument("a_k_bell: k outside 1..=n_max+1"));
    }
    let sum = pochhammer_bell_sum(k, -1.0 / ud.u0, bt);
    Ok(libm::pow(ud.u0, -(k as f64) / 2.0) * sum)
}

/// S_k = ((3^(3/4)Γ(2/3)/√π)^k / k!) Σ_{p=0}^{k−1} (−2Γ(2/3)/π)^p (k/2)_p
/// B_{k−1,p}(û^(1), …), with `bt_reduced` built from the reduced derivatives.
pub fn s_k(k: usize, c: &ConstantsTable, bt_reduced: &BellTable) -> Result<f64> {
    if k == 0 || k > bt_reduced.n_max() + 1 {
        return Err(Error::Argument("s_k: k outside 1..=n_max+1"));
    }
    let base = libm::pow(3.0, 0.75) * c.gamma_two_thirds / libm::sqrt(PI);
    let ratio = -2.0 * c.gamma_two_thirds / PI;
    // base^k / k! accumulated together to stay in range
    let prefactor = (1..=k).fold(1.0, |acc, j| acc * base / j as f64);
    Ok(prefactor * pochhammer_bell_sum(k, ratio, bt_reduced))
}

/// Maclaurin series of Ai′(x)/Ai′(0) to `order`, from the y″ = xy recurrence
/// (n+2)(n+1) c_{n+2} = c_{n−1} on the Ai coefficients.
pub fn a_ratio_series(c: &ConstantsTable, order: usize) -> PowerSeries {
    let mut ai = vec![0.0; order + 1];
    ai[0] = c.ai0;
    if order >= 1 {
        ai[1] = c.aip0;
    }
    for n in 1..order.saturating_sub(1) {
        ai[n + 2] = ai[n - 1] / ((n + 2) * (n + 1)) as f64;
    }
    PowerSeries::new((0..order).map(|n| (n + 1) as f64 * ai[n + 1] / c.aip0).collect())
}

/// k!·[w^k] x(w) for k = 1..=k_max, where x(w) reverts w = x √u(x).
pub fn a_k_reversion(k_max: usize, c: &ConstantsTable) -> Result<Vec<f64>> {
    if k_max == 0 || k_max > K_MAX_LIMIT {
        return Err(Error::Argument("a_k_reversion: k_max outside 1..=60"));
    }
    let order = k_max + 3;
    let a = a_ratio_series(c, order);
    let mut zc: Vec<f64> = a.coeffs().iter().map(|v| -v).collect();
    zc[0] += 1.0;
    // z₀ = 0 exactly; z₁ = 0 since Ai″(0) = 0.
    zc[0] = 0.0;
    let u = PowerSeries::new(zc).shift_down(2).map_err(|_| Error::Internal("z(x) not O(x²)"))?;
    if !(u.coeff(0) > 0.0) {
        return Err(Error::Internal("u(0) must be positive"));
    }
    let w = u.sqrt()?.shift_up(1);
    let x = w.truncate(k_max + 1).revert()?;
    let mut fact = 1.0;
    Ok((1..=k_max)
        .map(|k| {
            fact *= k as f64;
            fact * x.coeff(k)
        })
        .collect())
}

/// Σ_{k≤K} (a_k/k!) z^(k/2), the truncated inverse x(z).
pub fn inverse_series_eval(a: &[f64], z: f64) -> f64 {
    let w = libm::sqrt(z);
    let mut term_scale = 1.0;
    let mut acc = 0.0;
    for (i, &ak) in a.iter().enumerate() {
        let k = (i + 1) as f64;
        term_scale *= w / k;
        acc += ak * term_scale;
    }
    acc
}

/// One row of the coefficient table.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoefficientRow {
    pub k: usize,
    pub a_k_bell: f64,
    pub a_k_reversion: f64,
    /// |a_k_bell − a_k_reversion| / max(|a_k_bell|, ε).
    pub rel_gap: f64,
    pub s_k: f64,
    pub w_k: f64,
    pub i_k: f64,
    pub partial_sum: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoefficientTable {
    pub k_max: usize,
    pub rows: Vec<CoefficientRow>,
}

/// Two-route agreement thresholds: (k limit, relative gap).
pub const TWO_ROUTE_TOL: [(usize, f64); 2] = [(20, 1e-9), (30, 1e-6)];
/// S_k against 3^(1/3) a_k / k!.
pub const S_K_CONSISTENCY_TOL: f64 = 1e-9;

impl CoefficientTable {
    pub fn row(&self, k: usize) -> Option<&CoefficientRow> {
        k.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn s_values(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.rows.iter().map(|r| (r.k, r.s_k))
    }

    /// Largest relative two-route gap over k ≤ k_limit.
    pub fn max_gap(&self, k_limit: usize) -> f64 {
        self.rows.iter().filter(|r| r.k <= k_limit).map(|r| r.rel_gap).fold(0.0, f64::max)
    }

    /// Largest |S_k − 3^(1/3) a_k/k!| / |S_k|.
    pub fn max_s_k_inconsistency(&self) -> f64 {
        let mut fact = 1.0;
        self.rows
            .iter()
            .map(|r| {
                fact *= r.k as f64;
                let via_a = libm::cbrt(3.0) * r.a_k_bell / fact;
                libm::fabs(r.s_k - via_a) / libm::fabs(r.s_k)
            })
            .fold(0.0, f64::max)
    }

    /// Checks the two-route and S_k consistency thresholds.
    pub fn check(&self) -> Result<()> {
        for (limit, tol) in TWO_ROUTE_TOL {
            if self.max_gap(limit) > tol {
                return Err(Error::Internal("Bell and reversion coefficients disagree"));
            }
        }
        if self.max_s_k_inconsistency() > S_K_CONSISTENCY_TOL {
            return Err(Error::Internal("S_k inconsistent with a_k"));
        }
        Ok(())
    }
}

/// Builds rows k = 1..=k_max: both a_k routes, S_k, the weight w_k, the
/// summand I_k and the running partial sum of I.
pub fn coefficient_table(k_max: usize, c: &ConstantsTable) -> Result<CoefficientTable> {
    if k_max == 0 || k_max > K_MAX_LIMIT {
        return Err(Error::Argument("coefficient_table: k_max outside 1..=60"));
    }
    let n_max = k_max - 1;
    let ud = u_derivatives(c, k_max)?;
    let bt_raw = bell_table(&ud.raw_u, n_max)?;
    let bt_reduced = bell_table(&ud.u_hat, n_max)?;
    let reversion = a_k_reversion(k_max, c)?;

    let mut rows = Vec::with_capacity(k_max);
    let mut partial = 0.0;
    for k in 1..=k_max {
        let bell = a_k_bell(k, &ud, &bt_raw)?;
        let rev = reversion[k - 1];
        let sk = s_k(k, c, &bt_reduced)?;
        let ik = summand(k, sk);
        partial += ik;
        rows.push(CoefficientRow {
            k,
            a_k_bell: bell,
            a_k_reversion: rev,
            rel_gap: libm::fabs(bell - rev) / libm::fabs(bell).max(f64::MIN_POSITIVE),
            s_k: sk,
            w_k: weight(k),
            i_k: ik,
            partial_sum: partial,
        });
    }
    Ok(CoefficientTable { k_max, rows })
}

/// [`coefficient_table`] with freshly built constants.
pub fn default_coefficient_table(k_max: usize) -> Result<CoefficientTable> {
    coefficient_table(k_max, &build_constants())
}
