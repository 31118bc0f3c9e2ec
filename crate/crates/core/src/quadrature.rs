//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Panels are kept in a max-heap keyed on their error estimate |K15 − G7|;
//! the worst panel is bisected until the summed estimate falls below the
//! absolute tolerance. Nodes are interior, so integrable endpoint
//! singularities such as ln(1 − z) at z = 1 are handled by refinement alone.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::specfun::{a_ratio, ln_a_ratio, AiryEvalConfig};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub n_evaluations: usize,
    /// Upper limit actually integrated to (1 for unit-interval integrals).
    pub truncation_point: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    /// Equal-width panels the interval is split into before adapting.
    pub initial_panels: usize,
    pub max_evaluations: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions { initial_panels: 1, max_evaluations: 1_000_000 }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // ties broken by position so the refinement order is deterministic
        self.error.total_cmp(&other.error).then(other.a.total_cmp(&self.a))
    }
}

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Panel { a, b, value: kronrod * half, error: libm::fabs((kronrod - gauss) * half) }
}

/// Adaptive integration of `f` over [a, b] to absolute tolerance `tol`.
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    if !(tol > 0.0) || !(b > a) {
        return Err(Error::Argument("need tol > 0 and a < b"));
    }
    let n0 = opts.initial_panels.max(1);
    let width = (b - a) / n0 as f64;
    let mut heap = BinaryHeap::new();
    let mut done: Vec<Panel> = Vec::new();
    let mut evals = 0;
    for i in 0..n0 {
        let lo = a + width * i as f64;
        let hi = if i + 1 == n0 { b } else { lo + width };
        heap.push(gk15(&mut f, lo, hi));
        evals += 15;
    }
    let mut total_err: f64 = heap.iter().map(|p| p.error).sum();

    while total_err > tol {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) || evals + 30 > opts.max_evaluations {
            // cannot refine further
            done.push(worst);
            if evals + 30 > opts.max_evaluations {
                break;
            }
            continue;
        }
        let left = gk15(&mut f, worst.a, mid);
        let right = gk15(&mut f, mid, worst.b);
        evals += 30;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Fixed-order final accumulation.
    done.extend(heap.into_vec());
    done.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = done.iter().map(|p| p.value).sum();
    let err = done.iter().map(|p| p.error).sum::<f64>();
    let result = QuadratureResult { value, abs_error_estimate: err, n_evaluations: evals, truncation_point: b };
    if err > tol {
        return Err(Error::Convergence { best: result });
    }
    Ok(result)
}

/// ∫₀¹ f(z) dz. The nodes never touch either endpoint.
pub fn integrate_unit<F: FnMut(f64) -> f64>(f: F, tol: f64) -> Result<QuadratureResult> {
    integrate(f, 0.0, 1.0, tol, &QuadratureOptions::default())
}

/// Integrand A(x)² ln A(x) of the logarithmic Airy integral.
pub fn log_airy_integrand(x: f64, cfg: &AiryEvalConfig) -> Result<f64> {
    let ln_a = ln_a_ratio(x, cfg)?;
    let a = if x <= cfg.x_switch { a_ratio(x, cfg)? } else { libm::exp(ln_a) };
    Ok(a * a * ln_a)
}

/// Upper bound on ∫_t^∞ |A² ln A| dx for t ≥ 2.
///
/// ln|A² ln A| decreases at rate at least 2√x − 2/x there (the −2ζ exponent
/// against the growth of x^(1/2)|ln A|), so the tail is at most
/// |g(t)| / (2√t − 2/t − 0.1).
pub fn tail_bound(t: f64, cfg: &AiryEvalConfig) -> Result<f64> {
    if t < 2.0 {
        return Err(Error::Argument("tail bound needs t ≥ 2"));
    }
    let g = libm::fabs(log_airy_integrand(t, cfg)?);
    Ok(g / (2.0 * libm::sqrt(t) - 2.0 / t - 0.1))
}

/// Smallest grid point t ∈ {2, 2.25, …} with tail_bound(t) < tol/10, capped
/// at x_max.
pub fn truncation_point(cfg: &AiryEvalConfig, tol: f64) -> Result<f64> {
    let mut t = 2.0;
    while t < cfg.x_max {
        if tail_bound(t, cfg)? < tol / 10.0 {
            return Ok(t);
        }
        t += 0.25;
    }
    Ok(cfg.x_max)
}

/// I = ∫₀^∞ A(x)² ln A(x) dx, truncated where the analytic tail bound drops
/// below tol/10.
pub fn integrate_i(cfg: &AiryEvalConfig, tol: f64) -> Result<QuadratureResult> {
    integrate_i_with(cfg, tol, &QuadratureOptions::default())
}

pub fn integrate_i_with(
    cfg: &AiryEvalConfig,
    tol: f64,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(tol >= 1e-12) {
        return Err(Error::Argument("quadrature tolerance must be at least 1e-12"));
    }
    let t = truncation_point(cfg, tol)?;
    // the domain was checked above, so the integrand cannot fail
    let f = |x: f64| log_airy_integrand(x, cfg).unwrap_or(f64::NAN);
    let inner_tol = 0.9 * tol;
    let r = integrate(f, 0.0, t, inner_tol, opts)?;
    if !r.value.is_finite() {
        return Err(Error::Internal("non-finite integrand"));
    }
    Ok(r)
}
