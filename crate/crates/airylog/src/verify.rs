//! Acceptance checks run by `airylog verify` and by the `acceptance` test
//! target. Every threshold is pinned here.

use std::f64::consts::PI;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use airylog_core::bell::bell_table;
use airylog_core::specfun::{airy_prime_asymptotic, airy_prime_maclaurin};
use airylog_core::{
    accelerate, build_constants, coefficient_table, digamma_half_int, gamma_fn, integrate_i,
    integrate_unit, weight, AiryEvalConfig, CoefficientTable, ConstantsTable, QuadratureResult,
    AccelerationReport, SigmaSet, TailSource,
};

use crate::error::AppError;
use crate::output::{CheckOutcome, VerifyReport};

pub const ORACLE_REFERENCE: f64 = -0.263_631_71;
pub const ORACLE_ABS_TOL: f64 = 5e-8;
pub const ORACLE_MAX_SECONDS: f64 = 1.0;
pub const QUAD_TOL: f64 = 1e-10;

pub const K_MAX: usize = 30;
pub const K_HEAD: usize = 10;
pub const FIT_RANGE: (usize, usize) = (10, 30);

pub const GAP_TOL_K20: f64 = 1e-9;
pub const GAP_TOL_K30: f64 = 1e-6;
pub const S_K_TOL: f64 = 1e-9;

pub const HEAD_RATIO_RANGE: (f64, f64) = (0.90, 0.92);

pub const SIGMA_PRINTED: [f64; 3] = [-0.038_989_358_8, -0.019_176_671_4, -0.014_652_268_2];
pub const SIGMA_PRINTED_TOL: f64 = 1e-8;
pub const SIGMA_CLOSED_TOL: f64 = 1e-9;
pub const SIGMA2_FLAG_GAP: f64 = 0.1;

pub const REMAINDER_PUBLISHED: f64 = -0.004_280_449;
pub const I_ACCELERATED_PUBLISHED: f64 = -0.263_716_670_2;
pub const PUBLISHED_ARITHMETIC_TOL: f64 = 1e-8;

pub const ACCELERATED_REL_TOL: f64 = 2e-3;
pub const WEIGHT_QUAD_TOL: f64 = 1e-10;

pub const BELL_INSTANCES: usize = 100;
pub const BELL_N: usize = 8;
pub const BELL_REL_TOL: f64 = 1e-12;
pub const BELL_NUMBERS: [f64; 7] = [1.0, 1.0, 2.0, 5.0, 15.0, 52.0, 203.0];

pub const GAMMA_TOL: f64 = 1e-13;
pub const DIGAMMA_TOL: f64 = 1e-13;
pub const AIRY_BRANCH_TOL: f64 = 1e-10;

pub const VERIFY_MAX_SECONDS: f64 = 10.0;

/// Everything the checks share, computed once.
#[derive(Debug, Clone)]
pub struct VerifyContext {
    pub constants: ConstantsTable,
    pub airy: AiryEvalConfig,
    pub table: CoefficientTable,
    pub sigmas: SigmaSet,
    pub oracle: QuadratureResult,
    pub oracle_seconds: f64,
}

impl VerifyContext {
    pub fn build() -> Result<Self, AppError> {
        let constants = build_constants();
        let airy = AiryEvalConfig::default();
        let start = Instant::now();
        let oracle = integrate_i(&airy, QUAD_TOL)?;
        let oracle_seconds = start.elapsed().as_secs_f64();
        Ok(VerifyContext {
            table: coefficient_table(K_MAX, &constants)?,
            sigmas: SigmaSet::compute(&constants)?,
            constants,
            airy,
            oracle,
            oracle_seconds,
        })
    }
}

fn outcome(id: &str, description: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { id: id.to_string(), description: description.to_string(), passed, detail }
}

fn failed(id: &str, description: &str, err: impl std::fmt::Display) -> CheckOutcome {
    outcome(id, description, false, format!("error: {err}"))
}

pub fn oracle_value(ctx: &VerifyContext) -> CheckOutcome {
    let dev = (ctx.oracle.value - ORACLE_REFERENCE).abs();
    outcome(
        "1",
        "quadrature oracle",
        dev <= ORACLE_ABS_TOL && ctx.oracle_seconds < ORACLE_MAX_SECONDS,
        format!(
            "I = {:.12} (|Δ| = {dev:.2e} ≤ {ORACLE_ABS_TOL:e}), est. error {:.1e}, {:.3} s (< {ORACLE_MAX_SECONDS} s)",
            ctx.oracle.value, ctx.oracle.abs_error_estimate, ctx.oracle_seconds
        ),
    )
}

pub fn two_route_coefficients(ctx: &VerifyContext) -> CheckOutcome {
    let g20 = ctx.table.max_gap(20);
    let g30 = ctx.table.max_gap(30);
    outcome(
        "2",
        "Bell vs reversion a_k",
        g20 <= GAP_TOL_K20 && g30 <= GAP_TOL_K30,
        format!("max gap k≤20 {g20:.2e} (≤ {GAP_TOL_K20:e}), k≤30 {g30:.2e} (≤ {GAP_TOL_K30:e})"),
    )
}

pub fn s_k_consistency(ctx: &VerifyContext) -> CheckOutcome {
    let gap = ctx.table.max_s_k_inconsistency();
    outcome(
        "3",
        "S_k = 3^(1/3) a_k / k!",
        gap <= S_K_TOL,
        format!("max relative gap k≤30 {gap:.2e} (≤ {S_K_TOL:e})"),
    )
}

pub fn head_ratio(ctx: &VerifyContext) -> CheckOutcome {
    let head = ctx.table.row(K_HEAD).map(|r| r.partial_sum).unwrap_or(f64::NAN);
    let ratio = head / ctx.oracle.value;
    outcome(
        "4",
        "ten-term partial sum / oracle",
        ratio >= HEAD_RATIO_RANGE.0 && ratio <= HEAD_RATIO_RANGE.1,
        format!("ratio {ratio:.5} in [{}, {}]", HEAD_RATIO_RANGE.0, HEAD_RATIO_RANGE.1),
    )
}

pub fn sigma_values(ctx: &VerifyContext) -> CheckOutcome {
    let s = &ctx.sigmas;
    let direct = s.direct();
    let printed_dev = direct
        .iter()
        .zip(SIGMA_PRINTED)
        .map(|(d, p)| (d - p).abs())
        .fold(0.0, f64::max);
    let s1 = (s.sigma1_closed - s.sigma1_direct).abs();
    let s3 = (s.sigma3_closed - s.sigma3_direct).abs();
    let s2_printed = (s.sigma2_closed - s.sigma2_direct).abs();
    let s2_corr = (s.sigma2_corrected - s.sigma2_direct).abs();
    let passed = printed_dev <= SIGMA_PRINTED_TOL
        && s1 <= SIGMA_CLOSED_TOL
        && s3 <= SIGMA_CLOSED_TOL
        && s2_printed > SIGMA2_FLAG_GAP
        && s2_corr <= SIGMA_CLOSED_TOL;
    outcome(
        "5",
        "σ sums and closed forms",
        passed,
        format!(
            "direct vs printed values {printed_dev:.1e}; closed−direct σ₁ {s1:.1e}, σ₃ {s3:.1e}; \
             printed σ₂ off by {s2_printed:.3} (flagged), 11/64 variant {s2_corr:.1e}"
        ),
    )
}

fn published_report(ctx: &VerifyContext) -> Result<AccelerationReport, airylog_core::Error> {
    accelerate(&ctx.table, &ctx.sigmas, ctx.oracle.value, K_HEAD, FIT_RANGE, TailSource::Published)
}

pub fn published_remainder(ctx: &VerifyContext) -> CheckOutcome {
    let (id, desc) = ("6a", "remainder bracket with the published (a, b, c)");
    match published_report(ctx) {
        Ok(r) => {
            let d = (r.remainder_bracket - REMAINDER_PUBLISHED).abs();
            outcome(
                id,
                desc,
                d <= PUBLISHED_ARITHMETIC_TOL,
                format!(
                    "{:.12} vs {REMAINDER_PUBLISHED} (|Δ| {d:.1e} ≤ {PUBLISHED_ARITHMETIC_TOL:e}); with 8/3^(1/3) prefactor {:.12}",
                    r.remainder_bracket, r.remainder
                ),
            )
        }
        Err(e) => failed(id, desc, e),
    }
}

pub fn published_accelerated(ctx: &VerifyContext) -> CheckOutcome {
    let (id, desc) = ("6b", "accelerated I with the published (a, b, c)");
    match published_report(ctx) {
        Ok(r) => {
            let d = (r.i_accelerated - I_ACCELERATED_PUBLISHED).abs();
            outcome(
                id,
                desc,
                d <= PUBLISHED_ARITHMETIC_TOL,
                format!(
                    "{:.10} vs {I_ACCELERATED_PUBLISHED} (|Δ| {d:.1e}, tol {PUBLISHED_ARITHMETIC_TOL:e}); head sum {:.10} + remainder {:.10}",
                    r.i_accelerated, r.head_sum, r.remainder
                ),
            )
        }
        Err(e) => failed(id, desc, e),
    }
}

pub fn fitted_acceleration(ctx: &VerifyContext) -> CheckOutcome {
    let id = "7";
    let desc = "accelerated I with fitted tail";
    match accelerate(&ctx.table, &ctx.sigmas, ctx.oracle.value, K_HEAD, FIT_RANGE, TailSource::Fitted) {
        Ok(r) => outcome(
            id,
            desc,
            r.rel_error_vs_oracle <= ACCELERATED_REL_TOL,
            format!(
                "I = {:.10}, rel. error {:.2e} (≤ {ACCELERATED_REL_TOL:e}); fit k∈[{}, {}] a={:.9} b={:.8} c={:.9}, published a=0.751653834 b=2.25325549 c=-6.815672901",
                r.i_accelerated, r.rel_error_vs_oracle, r.fit_lo, r.fit_hi, r.a, r.b, r.c
            ),
        ),
        Err(e) => failed(id, desc, e),
    }
}

pub fn weight_quadrature(_ctx: &VerifyContext) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for k in 1..=4usize {
        let half_k = k as f64 / 2.0;
        let f = |z: f64| (1.0 - z) * (1.0 + 2.0 * (1.0 - z).ln()) * z.powf(half_k);
        match integrate_unit(f, 1e-13) {
            Ok(q) => worst = worst.max((q.value - weight(k)).abs()),
            Err(e) => return failed("8", "weight vs quadrature", e),
        }
    }
    outcome(
        "8",
        "weight vs quadrature",
        worst <= WEIGHT_QUAD_TOL,
        format!("max |w_k − ∫(1−z)(1+2ln(1−z))z^(k/2)| over k=1..4: {worst:.1e} (≤ {WEIGHT_QUAD_TOL:e})"),
    )
}

pub fn bell_suite(_ctx: &VerifyContext) -> CheckOutcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_be11);
    let mut worst: f64 = 0.0;
    for _ in 0..BELL_INSTANCES {
        let x: Vec<f64> = (0..BELL_N).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let alpha: f64 = rng.gen_range(-2.0..2.0);
        let abs_x: Vec<f64> = x.iter().map(|v| v.abs()).collect();
        let deg: Vec<f64> = x.iter().map(|v| alpha * v).collect();
        let wt: Vec<f64> = x.iter().enumerate().map(|(j, v)| alpha.powi(j as i32 + 1) * v).collect();
        let (Ok(t), Ok(t_abs), Ok(t_deg), Ok(t_wt)) = (
            bell_table(&x, BELL_N),
            bell_table(&abs_x, BELL_N),
            bell_table(&deg, BELL_N),
            bell_table(&wt, BELL_N),
        ) else {
            return failed("9", "Bell polynomial suite", "table construction");
        };
        for n in 0..=BELL_N {
            for k in 0..=n {
                // B(|x|) bounds any cancellation inside B(x)
                let a = alpha.abs();
                let scale_deg = a.powi(k as i32) * t_abs.get(n, k);
                let scale_wt = a.powi(n as i32) * t_abs.get(n, k);
                if scale_deg > 0.0 {
                    let e = (t_deg.get(n, k) - alpha.powi(k as i32) * t.get(n, k)).abs() / scale_deg;
                    worst = worst.max(e);
                }
                if scale_wt > 0.0 {
                    let e = (t_wt.get(n, k) - alpha.powi(n as i32) * t.get(n, k)).abs() / scale_wt;
                    worst = worst.max(e);
                }
            }
        }
    }
    let ones = bell_table(&[1.0; 6], 6).expect("six unit arguments");
    let exact = BELL_NUMBERS.iter().enumerate().all(|(n, &b)| ones.row_sum(n) == b);
    outcome(
        "9",
        "Bell polynomial suite",
        worst <= BELL_REL_TOL && exact,
        format!(
            "scaling laws on {BELL_INSTANCES} random instances, n≤{BELL_N}: max rel. error {worst:.1e} (≤ {BELL_REL_TOL:e}); Bell numbers 1..203 exact: {exact}"
        ),
    )
}

pub fn special_functions(ctx: &VerifyContext) -> CheckOutcome {
    let reflection = match (gamma_fn(1.0 / 3.0), gamma_fn(2.0 / 3.0)) {
        (Ok(a), Ok(b)) => ((a * b) - 2.0 * PI / 3f64.sqrt()).abs() / (2.0 * PI / 3f64.sqrt()),
        _ => f64::INFINITY,
    };
    let mut psi_worst: f64 = 0.0;
    for two_x in 1..60u32 {
        let x = two_x as f64 / 2.0;
        match (digamma_half_int(two_x + 2), digamma_half_int(two_x)) {
            (Ok(hi), Ok(lo)) => psi_worst = psi_worst.max((hi - lo - 1.0 / x).abs()),
            _ => psi_worst = f64::INFINITY,
        }
    }
    let mut airy_worst: f64 = 0.0;
    let xs = ctx.airy.x_switch;
    for i in 0..=40 {
        let x = xs - 0.5 + i as f64 * 0.025;
        let m = airy_prime_maclaurin(x);
        let a = airy_prime_asymptotic(x, ctx.airy.n_asymptotic_terms);
        airy_worst = airy_worst.max(((m - a) / m).abs());
    }
    outcome(
        "10",
        "special functions",
        reflection <= GAMMA_TOL && psi_worst <= DIGAMMA_TOL && airy_worst <= AIRY_BRANCH_TOL,
        format!(
            "Γ(1/3)Γ(2/3) vs 2π/√3 {reflection:.1e} (≤ {GAMMA_TOL:e}); ψ recurrence {psi_worst:.1e} (≤ {DIGAMMA_TOL:e}); \
             Ai′ branches on [{:.1}, {:.1}] {airy_worst:.1e} (≤ {AIRY_BRANCH_TOL:e})",
            xs - 0.5,
            xs + 0.5
        ),
    )
}

pub type Check = fn(&VerifyContext) -> CheckOutcome;

pub const CHECKS: [Check; 11] = [
    oracle_value,
    two_route_coefficients,
    s_k_consistency,
    head_ratio,
    sigma_values,
    published_remainder,
    published_accelerated,
    fitted_acceleration,
    weight_quadrature,
    bell_suite,
    special_functions,
];

/// Runs every check plus the overall runtime bound.
pub fn run_all() -> Result<VerifyReport, AppError> {
    let start = Instant::now();
    let ctx = VerifyContext::build()?;
    let mut checks: Vec<CheckOutcome> = CHECKS.iter().map(|c| c(&ctx)).collect();
    let secs = start.elapsed().as_secs_f64();
    checks.push(outcome(
        "11",
        "verify runtime",
        secs < VERIFY_MAX_SECONDS,
        format!("{secs:.2} s (< {VERIFY_MAX_SECONDS} s)"),
    ));
    let passed = checks.iter().filter(|c| c.passed).count();
    Ok(VerifyReport { failed: checks.len() - passed, passed, checks })
}
