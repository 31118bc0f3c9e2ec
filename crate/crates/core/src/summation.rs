//! Summands of the Bell-polynomial series for I, the digamma sums σ₁–σ₃,
//! the power-law tail fit of S_k and the accelerated value of I.
//!
//! With D_k = ψ(3) − ψ(k/2 + 3),
//!
//! ```text
//! I   = 3^(−1/3) Σ_k w_k S_k,          w_k = 8 D_k / ((k+2)(k+4))
//! σ_m = Σ_k D_k / (k^m (k+2)(k+4)),    m = 1, 2, 3
//! ```
//!
//! Replacing S_k by a/k + b/k² + c/k³ beyond k_head turns the tail of I into
//! a combination of σ₁, σ₂, σ₃ minus their head sums.

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use crate::constants::{ConstantsTable, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::inversion::CoefficientTable;
use crate::quadrature::{integrate, QuadratureOptions};
use crate::specfun::digamma_half_int;

/// 8 / 3^(1/3).
pub fn series_prefactor() -> f64 {
    8.0 / libm::cbrt(3.0)
}

/// w_k = 8 [ψ(3) − ψ(k/2 + 3)] / ((k+2)(k+4)), from the exact half-integer
/// digamma sums. Equals ∫₀¹ (1−z)(1 + 2 ln(1−z)) z^(k/2) dz.
pub fn weight(k: usize) -> f64 {
    let psi3 = digamma_half_int(6).expect("positive argument");
    let psi = digamma_half_int(k as u32 + 6).expect("positive argument");
    let kf = k as f64;
    8.0 * (psi3 - psi) / ((kf + 2.0) * (kf + 4.0))
}

/// I_k = (8/3^(1/3)) [ψ(3) − ψ(k/2+3)] / ((k+2)(k+4)) · S_k.
pub fn summand(k: usize, s_k: f64) -> f64 {
    weight(k) * s_k / libm::cbrt(3.0)
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Walks D_k = ψ(3) − ψ(k/2 + 3) for k = 1, 2, 3, … using ψ(x+1) = ψ(x) + 1/x
/// separately on the odd and even k, with compensated accumulation.
#[derive(Debug, Clone)]
pub struct DigammaDifferences {
    k: usize,
    even: CompensatedSum,
    odd: CompensatedSum,
}

impl DigammaDifferences {
    pub fn new() -> Self {
        let mut odd = CompensatedSum::default();
        // D_{−1} = ψ(3) − ψ(5/2) = 2 ln 2 − 7/6
        odd.add(2.0 * LN_2);
        odd.add(-7.0 / 6.0);
        DigammaDifferences { k: 0, even: CompensatedSum::default(), odd }
    }
}

impl Default for DigammaDifferences {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for DigammaDifferences {
    /// (k, D_k)
    type Item = (usize, f64);

    fn next(&mut self) -> Option<(usize, f64)> {
        self.k += 1;
        let k = self.k;
        // going from k−2 to k raises the ψ argument from k/2 + 2 to k/2 + 3
        let x = k as f64 / 2.0 + 2.0;
        let acc = if k % 2 == 0 { &mut self.even } else { &mut self.odd };
        acc.add(-1.0 / x);
        Some((k, acc.value()))
    }
}

fn sigma_term(m: u32, k: usize, d: f64) -> f64 {
    let kf = k as f64;
    d / (libm::pow(kf, m as f64) * (kf + 2.0) * (kf + 4.0))
}

fn check_order(m: u32) -> Result<()> {
    if !(1..=3).contains(&m) {
        return Err(Error::Argument("sigma order must be 1, 2 or 3"));
    }
    Ok(())
}

/// Σ_{k=1}^{n} D_k / (k^m (k+2)(k+4)).
pub fn sigma_partial(m: u32, n: usize) -> Result<f64> {
    check_order(m)?;
    let mut acc = CompensatedSum::default();
    for (k, d) in DigammaDifferences::new().take(n) {
        acc.add(sigma_term(m, k, d));
    }
    Ok(acc.value())
}

/// ψ(x) for large x from the asymptotic series; only used for the smooth
/// interpolant in the σ tail, where x > 50.
fn digamma_large(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    libm::log(x) - 0.5 / x
        - inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)))
}

/// How the part of σ_m beyond the last summed term is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaTail {
    /// Plain partial sum.
    None,
    /// Adds ∫_{n+1/2}^∞ f(t) dt for the smooth interpolant f of the terms,
    /// the midpoint comparison of sum and integral.
    Integral,
}

/// σ_m by direct summation of `n_terms` terms plus the chosen tail estimate.
pub fn sigma_direct(m: u32, n_terms: usize, tail: SigmaTail) -> Result<f64> {
    check_order(m)?;
    if n_terms < 100 {
        return Err(Error::Argument("sigma_direct needs at least 100 terms"));
    }
    let head = sigma_partial(m, n_terms)?;
    match tail {
        SigmaTail::None => Ok(head),
        SigmaTail::Integral => Ok(head + sigma_tail_integral(m, n_terms as f64 + 0.5)?),
    }
}

/// ∫_t0^∞ f(t) dt with f(t) = (ψ(3) − ψ(t/2+3)) / (t^m (t+2)(t+4)), via t = t0/s.
pub fn sigma_tail_integral(m: u32, t0: f64) -> Result<f64> {
    let psi3 = 1.5 - EULER_GAMMA;
    let f = |s: f64| {
        let t = t0 / s;
        let d = psi3 - digamma_large(0.5 * t + 3.0);
        d / (libm::pow(t, m as f64) * (t + 2.0) * (t + 4.0)) * t0 / (s * s)
    };
    // the tail is O(ln t0 / t0^(m+2)); ask for far more than needed
    let scale = libm::log(t0) / libm::pow(t0, m as f64 + 2.0);
    Ok(integrate(f, 0.0, 1.0, 1e-8 * scale, &QuadratureOptions::default())?.value)
}

/// Default number of directly summed σ terms.
pub const SIGMA_TERMS: usize = 100_000;

/// The closed forms for σ₁, σ₂, σ₃ as printed in the source literature.
/// The σ₂ form carries an 11/16 ζ(3) coefficient; see [`sigma2_corrected`].
pub fn sigma_closed(m: u32, c: &ConstantsTable) -> Result<f64> {
    check_order(m)?;
    let l2 = LN_2;
    let z3 = c.zeta3;
    Ok(match m {
        1 => -89.0 / 576.0 + l2 / 6.0,
        2 => 349.0 / 1152.0 - 11.0 / 16.0 * z3 - l2 / 6.0,
        _ => {
            let pi2 = PI * PI;
            -2423.0 / 9216.0 + 5.0 * pi2 / 384.0 - 11.0 * pi2 * pi2 / 2880.0 - pi2 * l2 * l2 / 96.0
                + 5.0 * l2 / 48.0
                + l2 * l2 * l2 * l2 / 96.0
                + (7.0 * l2 / 32.0 + 33.0 / 256.0) * z3
                + 0.25 * c.li4_half
        }
    })
}

/// σ₂ = 349/1152 − (11/64) ζ(3) − ln 2 / 6. This form is a hypothesis; the
/// direct sum decides whether it holds.
pub fn sigma2_corrected(c: &ConstantsTable) -> f64 {
    349.0 / 1152.0 - 11.0 / 64.0 * c.zeta3 - LN_2 / 6.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SigmaSet {
    pub sigma1_closed: f64,
    pub sigma2_closed: f64,
    pub sigma3_closed: f64,
    pub sigma1_direct: f64,
    pub sigma2_direct: f64,
    pub sigma3_direct: f64,
    pub sigma2_corrected: f64,
}

/// |σ₁ closed − direct| bound.
pub const SIGMA1_TOL: f64 = 1e-10;
/// |σ₃ closed − direct| bound.
pub const SIGMA3_TOL: f64 = 1e-9;
/// |σ₂ corrected − direct| bound.
pub const SIGMA2_CORRECTED_TOL: f64 = 1e-10;
/// Gap above which the printed σ₂ form counts as discrepant.
pub const SIGMA2_FLAG_GAP: f64 = 0.1;

impl SigmaSet {
    pub fn compute(c: &ConstantsTable) -> Result<Self> {
        Self::compute_with(c, SIGMA_TERMS)
    }

    pub fn compute_with(c: &ConstantsTable, n_terms: usize) -> Result<Self> {
        Ok(SigmaSet {
            sigma1_closed: sigma_closed(1, c)?,
            sigma2_closed: sigma_closed(2, c)?,
            sigma3_closed: sigma_closed(3, c)?,
            sigma1_direct: sigma_direct(1, n_terms, SigmaTail::Integral)?,
            sigma2_direct: sigma_direct(2, n_terms, SigmaTail::Integral)?,
            sigma3_direct: sigma_direct(3, n_terms, SigmaTail::Integral)?,
            sigma2_corrected: sigma2_corrected(c),
        })
    }

    /// The authoritative values: direct sums.
    pub fn direct(&self) -> [f64; 3] {
        [self.sigma1_direct, self.sigma2_direct, self.sigma3_direct]
    }

    pub fn sigma1_agrees(&self) -> bool {
        libm::fabs(self.sigma1_closed - self.sigma1_direct) <= SIGMA1_TOL
    }

    pub fn sigma3_agrees(&self) -> bool {
        libm::fabs(self.sigma3_closed - self.sigma3_direct) <= SIGMA3_TOL
    }

    /// True when the printed σ₂ form is off by more than [`SIGMA2_FLAG_GAP`].
    pub fn sigma2_printed_flagged(&self) -> bool {
        libm::fabs(self.sigma2_closed - self.sigma2_direct) > SIGMA2_FLAG_GAP
    }

    pub fn sigma2_corrected_agrees(&self) -> bool {
        libm::fabs(self.sigma2_corrected - self.sigma2_direct) <= SIGMA2_CORRECTED_TOL
    }
}

/// Coefficients of the tail model S_k ≈ a/k + b/k² + c/k³.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TailCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TailCoefficients {
    /// Published regression coefficients for S_k, k ≥ 10.
    pub const PUBLISHED: TailCoefficients =
        TailCoefficients { a: 0.751_653_834, b: 2.253_255_49, c: -6.815_672_901 };

    pub fn model(&self, k: f64) -> f64 {
        self.a / k + self.b / (k * k) + self.c / (k * k * k)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TailFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub k_lo: usize,
    pub k_hi: usize,
    /// max over the fit range of |model − S_k| / |S_k|.
    pub max_rel_residual: f64,
}

impl TailFit {
    pub fn coefficients(&self) -> TailCoefficients {
        TailCoefficients { a: self.a, b: self.b, c: self.c }
    }
}

/// Least-squares fit of y_k ≈ a/k + b/k² + c/k³ over the given points.
///
/// Solved by Householder QR of the n×3 design matrix.
pub fn fit_power_tail(points: &[(usize, f64)]) -> Result<TailCoefficients> {
    let n = points.len();
    if n < 3 {
        return Err(Error::Argument("tail fit needs at least 3 points"));
    }
    let mut cols: [Vec<f64>; 3] = [Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n)];
    let mut rhs: Vec<f64> = Vec::with_capacity(n);
    for &(k, y) in points {
        if k == 0 {
            return Err(Error::Argument("tail fit needs k ≥ 1"));
        }
        let inv = 1.0 / k as f64;
        cols[0].push(inv);
        cols[1].push(inv * inv);
        cols[2].push(inv * inv * inv);
        rhs.push(y);
    }
    let mut r = [[0.0f64; 3]; 3];
    for j in 0..3 {
        let norm = libm::sqrt(cols[j][j..].iter().map(|v| v * v).sum::<f64>());
        if norm == 0.0 {
            return Err(Error::Internal("degenerate tail-fit design matrix"));
        }
        let alpha = if cols[j][j] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = cols[j][j..].to_vec();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            return Err(Error::Internal("degenerate tail-fit design matrix"));
        }
        let reflect = |x: &mut [f64]| {
            let dot: f64 = v.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
            let s = 2.0 * dot / vnorm2;
            for (xi, vi) in x.iter_mut().zip(&v) {
                *xi -= s * vi;
            }
        };
        for col in cols.iter_mut().skip(j) {
            reflect(&mut col[j..]);
        }
        reflect(&mut rhs[j..]);
        for (i, col) in cols.iter().enumerate().skip(j) {
            r[j][i] = col[j];
        }
    }
    let mut x = [0.0; 3];
    for j in (0..3).rev() {
        let mut s = rhs[j];
        for i in j + 1..3 {
            s -= r[j][i] * x[i];
        }
        if r[j][j] == 0.0 {
            return Err(Error::Internal("degenerate tail-fit design matrix"));
        }
        x[j] = s / r[j][j];
    }
    Ok(TailCoefficients { a: x[0], b: x[1], c: x[2] })
}

/// Fits S_k over k_lo..=k_hi from the coefficient table.
pub fn fit_tail(table: &CoefficientTable, k_lo: usize, k_hi: usize) -> Result<TailFit> {
    if k_lo < 1 || k_lo >= k_hi || k_hi > table.k_max || k_hi - k_lo < 3 {
        return Err(Error::Argument("fit range must satisfy 1 ≤ k_lo, k_lo + 3 ≤ k_hi ≤ k_max"));
    }
    let points: Vec<(usize, f64)> = table.s_values().filter(|&(k, _)| k >= k_lo && k <= k_hi).collect();
    let coef = fit_power_tail(&points)?;
    let max_rel_residual = points
        .iter()
        .map(|&(k, s)| libm::fabs(coef.model(k as f64) - s) / libm::fabs(s))
        .fold(0.0, f64::max);
    Ok(TailFit { a: coef.a, b: coef.b, c: coef.c, k_lo, k_hi, max_rel_residual })
}

/// Tail replacement for the Bell series beyond k_head.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Remainder {
    /// Σ_m coef_m (σ_m − Σ_{k≤k_head} D_k/(k^m (k+2)(k+4))), without the
    /// 8/3^(1/3) prefactor.
    pub bracket: f64,
    /// (8/3^(1/3)) · bracket, the amount added to the head sum.
    pub scaled: f64,
}

/// Remainder of I after `k_head` terms when S_k follows the tail model.
/// `sigmas` are σ₁, σ₂, σ₃; the head sums use the same summation path as
/// [`sigma_partial`].
pub fn remainder(coef: &TailCoefficients, sigmas: [f64; 3], k_head: usize) -> Result<Remainder> {
    let mut bracket = 0.0;
    for (i, (&cm, &sm)) in coef.as_array().iter().zip(sigmas.iter()).enumerate() {
        bracket += cm * (sm - sigma_partial(i as u32 + 1, k_head)?);
    }
    Ok(Remainder { bracket, scaled: series_prefactor() * bracket })
}

/// Where the tail coefficients come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailSource {
    /// Least squares over the fit range of the computed S_k.
    Fitted,
    /// [`TailCoefficients::PUBLISHED`].
    Published,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AccelerationReport {
    pub k_head: usize,
    pub fit_lo: usize,
    pub fit_hi: usize,
    /// Coefficients used for the remainder.
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Least-squares fit over the fit range, always reported.
    pub fitted: TailFit,
    pub used_published_fit: bool,
    /// Σ_{k≤k_head} I_k.
    pub head_sum: f64,
    /// Remainder bracket before the 8/3^(1/3) prefactor.
    pub remainder_bracket: f64,
    /// Prefactor × bracket.
    pub remainder: f64,
    pub i_accelerated: f64,
    pub i_oracle: f64,
    pub rel_error_vs_oracle: f64,
}

/// Accelerated I from a precomputed coefficient table, σ set and oracle value.
pub fn accelerate(
    table: &CoefficientTable,
    sigmas: &SigmaSet,
    i_oracle: f64,
    k_head: usize,
    fit_range: (usize, usize),
    source: TailSource,
) -> Result<AccelerationReport> {
    let (fit_lo, fit_hi) = fit_range;
    if k_head == 0 || k_head > fit_lo {
        return Err(Error::Argument("need 1 ≤ k_head ≤ fit_lo"));
    }
    let fitted = fit_tail(table, fit_lo, fit_hi)?;
    let coef = match source {
        TailSource::Fitted => fitted.coefficients(),
        TailSource::Published => TailCoefficients::PUBLISHED,
    };
    let head_sum = table.row(k_head).ok_or(Error::Argument("k_head beyond table"))?.partial_sum;
    let rem = remainder(&coef, sigmas.direct(), k_head)?;
    let i_accelerated = head_sum + rem.scaled;
    Ok(AccelerationReport {
        k_head,
        fit_lo,
        fit_hi,
        a: coef.a,
        b: coef.b,
        c: coef.c,
        fitted,
        used_published_fit: source == TailSource::Published,
        head_sum,
        remainder_bracket: rem.bracket,
        remainder: rem.scaled,
        i_accelerated,
        i_oracle,
        rel_error_vs_oracle: libm::fabs(i_accelerated - i_oracle) / libm::fabs(i_oracle),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::build_constants;

    #[test]
    fn weights() {
        // 8(ψ(3) − ψ(7/2))/15 with ψ(7/2) − ψ(3) = 0.18037230554677604
        assert!((weight(1) - 8.0 * -0.180_372_305_546_776_04 / 15.0).abs() < 1e-15);
        assert!((weight(2) + 1.0 / 9.0).abs() < 1e-15);
        for k in 1..=60 {
            assert!(weight(k) < 0.0);
        }
    }

    #[test]
    fn walker_matches_exact_digamma() {
        let psi3 = digamma_half_int(6).unwrap();
        for (k, d) in DigammaDifferences::new().take(200) {
            let exact = psi3 - digamma_half_int(k as u32 + 6).unwrap();
            assert!((d - exact).abs() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn summand_first_term() {
        // I₁ = (8/3^(1/3)) · (−0.18037…/15) · S₁
        let s1 = 1.741_496_060_557_28;
        let i1 = summand(1, s1);
        assert!((i1 + 0.116_158_411_049).abs() < 1e-11);
        assert!(summand(5, 0.2) < 0.0);
    }

    #[test]
    fn digamma_large_accuracy() {
        for two_x in [120u32, 400, 2001] {
            let exact = digamma_half_int(two_x).unwrap();
            assert!((digamma_large(two_x as f64 / 2.0) - exact).abs() < 1e-13);
        }
    }

    #[test]
    fn sigma_direct_converges() {
        // the tail estimate closes most of the gap between 10³ and 10⁵ terms
        for m in 1..=3 {
            let short = sigma_direct(m, 1_000, SigmaTail::Integral).unwrap();
            let long = sigma_direct(m, 100_000, SigmaTail::Integral).unwrap();
            let raw_short = sigma_direct(m, 1_000, SigmaTail::None).unwrap();
            assert!((short - long).abs() < 1e-12, "m={m} {}", (short - long).abs());
            assert!((raw_short - long).abs() > (short - long).abs());
        }
    }

    #[test]
    fn sigma_values() {
        let c = build_constants();
        let s = SigmaSet::compute(&c).unwrap();
        assert!((s.sigma1_direct + 0.038_989_358_8).abs() < 1e-10);
        assert!((s.sigma2_direct + 0.019_176_671_4).abs() < 1e-10);
        assert!((s.sigma3_direct + 0.014_652_268_2).abs() < 1e-10);
        assert!(s.sigma1_agrees());
        assert!(s.sigma3_agrees());
        assert!(s.sigma2_printed_flagged());
        assert!(s.sigma2_corrected_agrees());
        assert!((s.sigma2_closed + 0.638_987_262_126_656).abs() < 1e-12);
    }

    #[test]
    fn sigma_errors() {
        assert!(sigma_direct(4, 1000, SigmaTail::None).is_err());
        assert!(sigma_direct(1, 99, SigmaTail::None).is_err());
        assert!(sigma_closed(0, &build_constants()).is_err());
    }

    #[test]
    fn synthetic_fit_recovers_model() {
        let truth = TailCoefficients { a: 0.5, b: 1.0, c: -2.0 };
        let pts: Vec<(usize, f64)> = (10..=30).map(|k| (k, truth.model(k as f64))).collect();
        let fit = fit_power_tail(&pts).unwrap();
        assert!((fit.a - 0.5).abs() < 1e-10);
        assert!((fit.b - 1.0).abs() < 1e-10);
        assert!((fit.c + 2.0).abs() < 1e-10);
    }

    #[test]
    fn fit_satisfies_normal_equations() {
        let pts: Vec<(usize, f64)> = (10..=30).map(|k| (k, (k as f64).ln() / k as f64)).collect();
        let f = fit_power_tail(&pts).unwrap();
        for p in 1..=3 {
            let g: f64 = pts
                .iter()
                .map(|&(k, y)| (f.model(k as f64) - y) * (k as f64).powi(-p))
                .sum();
            assert!(g.abs() < 1e-15, "p={p} g={g}");
        }
    }

    #[test]
    fn fit_errors() {
        assert!(fit_power_tail(&[(1, 1.0), (2, 1.0)]).is_err());
        assert!(fit_power_tail(&[(0, 1.0), (2, 1.0), (3, 1.0)]).is_err());
        let t = crate::inversion::default_coefficient_table(12).unwrap();
        assert!(fit_tail(&t, 10, 12).is_err());
        assert!(fit_tail(&t, 5, 13).is_err());
        assert!(fit_tail(&t, 0, 8).is_err());
        assert!(fit_tail(&t, 5, 12).is_ok());
    }

    #[test]
    fn remainder_zero_and_linear() {
        let sig = [-0.0389893588, -0.0191766714, -0.0146522682];
        let zero = TailCoefficients { a: 0.0, b: 0.0, c: 0.0 };
        assert_eq!(remainder(&zero, sig, 10).unwrap().scaled, 0.0);
        let p = TailCoefficients::PUBLISHED;
        let twice = TailCoefficients { a: 2.0 * p.a, b: 2.0 * p.b, c: 2.0 * p.c };
        let r1 = remainder(&p, sig, 10).unwrap();
        let r2 = remainder(&twice, sig, 10).unwrap();
        assert!((r2.scaled - 2.0 * r1.scaled).abs() < 1e-13 * r1.scaled.abs());
    }

    #[test]
    fn remainder_head_uses_partial_sums() {
        let c = TailCoefficients { a: 1.0, b: 0.0, c: 0.0 };
        let r = remainder(&c, [0.0; 3], 10).unwrap();
        assert_eq!(r.bracket, -sigma_partial(1, 10).unwrap());
    }

    #[test]
    fn published_bracket() {
        let sig = [-0.0389893588, -0.0191766714, -0.0146522682];
        let r = remainder(&TailCoefficients::PUBLISHED, sig, 10).unwrap();
        assert!((r.bracket + 0.004_280_449_344).abs() < 1e-8);
        assert!((r.scaled - series_prefactor() * r.bracket).abs() < 1e-18);
    }
}
