//! Γ on the positive axis, ψ on the half-integer grid, and Ai′ on [0, x_max].

use core::f64::consts::{LN_2, PI};

use crate::dd::Dd;
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for x > 0.
///
/// The Lanczos sum is only evaluated on [1, 2); other arguments are moved
/// there with Γ(x + 1) = xΓ(x). Positive integers take the exact factorial
/// product.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() || x > 171.0 {
        return Err(Error::Domain { what: "gamma", value: x });
    }
    if x == libm::floor(x) {
        return Ok((2..x as u32).fold(1.0, |acc, j| acc * j as f64));
    }
    if x < 1.0 {
        return Ok(lanczos(x + 1.0) / x);
    }
    let mut t = x;
    let mut scale = 1.0;
    while t >= 2.0 {
        t -= 1.0;
        scale *= t;
    }
    Ok(lanczos(t) * scale)
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    libm::sqrt(2.0 * PI) * libm::pow(t, x + 0.5) * libm::exp(-t) * acc
}

/// ψ(two_x / 2) for a positive integer or half-integer argument, by the
/// exact finite sums
///
/// ```text
/// ψ(m)       = −γ + Σ_{j=1}^{m−1} 1/j
/// ψ(m + 1/2) = −γ − 2 ln 2 + 2 Σ_{j=1}^{m} 1/(2j − 1)
/// ```
pub fn digamma_half_int(two_x: u32) -> Result<f64> {
    if two_x == 0 {
        return Err(Error::Domain { what: "digamma", value: 0.0 });
    }
    let euler = crate::constants::EULER_GAMMA;
    // Smallest terms first.
    let sum = if two_x % 2 == 0 {
        let m = two_x / 2;
        (1..m).rev().fold(0.0, |acc, j| acc + 1.0 / j as f64)
    } else {
        let m = two_x / 2;
        (1..=m).rev().fold(0.0, |acc, j| acc + 2.0 / (2 * j - 1) as f64) - 2.0 * LN_2
    };
    Ok(sum - euler)
}

/// Evaluation settings for [`airy_prime`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AiryEvalConfig {
    /// Maclaurin series at or below this point, asymptotic expansion above.
    pub x_switch: f64,
    pub n_asymptotic_terms: usize,
    /// Upper end of the evaluation domain and of the quadrature.
    pub x_max: f64,
}

impl Default for AiryEvalConfig {
    fn default() -> Self {
        AiryEvalConfig { x_switch: 8.0, n_asymptotic_terms: 20, x_max: 12.0 }
    }
}

impl AiryEvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_switch > 0.0 && self.x_switch < self.x_max) {
            return Err(Error::Argument("need 0 < x_switch < x_max"));
        }
        if self.n_asymptotic_terms == 0 {
            return Err(Error::Argument("n_asymptotic_terms must be at least 1"));
        }
        if self.n_asymptotic_terms > smallest_asymptotic_term(zeta(self.x_switch)) {
            return Err(Error::Argument("n_asymptotic_terms beyond optimal truncation at x_switch"));
        }
        Ok(())
    }
}

fn zeta(x: f64) -> f64 {
    2.0 / 3.0 * x * libm::sqrt(x)
}

// Ai(0) and Ai′(0) as double-double pairs.
const AI0_DD: Dd = Dd::new(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
const AIP0_DD: Dd = Dd::new(-0.258_819_403_792_806_8, 2.522_243_111_610_832e-17);

/// Ai′(0).
pub const AIRY_PRIME_AT_ZERO: f64 = AIP0_DD.hi;

/// Ai′(x) from the Maclaurin series of the two fundamental solutions of
/// y″ = xy,
///
/// ```text
/// f(x) = 1 + x³/6 + x⁶/180 + …,    g(x) = x + x⁴/12 + …,
/// Ai′(x) = Ai(0) f′(x) + Ai′(0) g′(x),
/// ```
///
/// summed in double-double arithmetic. Cancellation between the two growing
/// series costs about 2ζ/ln 10 digits, which the extra precision absorbs up
/// to x ≈ 9.
pub fn airy_prime_maclaurin(x: f64) -> f64 {
    if x == 0.0 {
        return AIP0_DD.hi;
    }
    let xd = Dd::from_f64(x);
    let x3 = xd * xd * x;
    // f′ terms: P₁ = x²/2, P_m = P_{m−1} x³ / ((3m−1)(3m−3)).
    // g′ terms: Q₀ = 1,    Q_m = Q_{m−1} x³ / (3m(3m−2)).
    let mut p = xd * x / 2.0;
    let mut q = Dd::from_f64(1.0);
    let mut fp = p;
    let mut gp = q;
    for m in 1..400u32 {
        let mf = m as f64;
        q = q * x3 / (3.0 * mf * (3.0 * mf - 2.0));
        gp = gp + q;
        if m >= 2 {
            p = p * x3 / ((3.0 * mf - 1.0) * (3.0 * mf - 3.0));
            fp = fp + p;
        }
        if m > 2 && p.abs().hi < 1e-34 * fp.hi && q.abs().hi < 1e-34 * gp.hi {
            break;
        }
    }
    (AI0_DD * fp + AIP0_DD * gp).to_f64()
}

/// Coefficients u_k of the large-ζ Airy expansions.
fn asymptotic_u(k: usize) -> f64 {
    (1..=k).fold(1.0, |u, j| {
        let j = j as f64;
        u * (6.0 * j - 5.0) * (6.0 * j - 3.0) * (6.0 * j - 1.0) / (216.0 * j * (2.0 * j - 1.0))
    })
}

fn asymptotic_v(k: usize) -> f64 {
    let kf = k as f64;
    asymptotic_u(k) * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf)
}

/// Index of the smallest |v_k| ζ^(−k), the optimal truncation point.
fn smallest_asymptotic_term(zeta: f64) -> usize {
    let (mut best_k, mut best) = (0usize, 1.0f64);
    for k in 1..200 {
        let term = libm::fabs(asymptotic_v(k)) / libm::pow(zeta, k as f64);
        if !term.is_finite() {
            break;
        }
        if term < best {
            (best_k, best) = (k, term);
        } else if term > 4.0 * best {
            break;
        }
    }
    best_k
}

/// Σ_{k<n} (−1)^k v_k ζ^(−k).
fn asymptotic_sum(zeta: f64, n_terms: usize) -> f64 {
    let mut acc = 0.0;
    // Horner in 1/ζ, highest order first.
    let inv = -1.0 / zeta;
    for k in (0..n_terms).rev() {
        acc = acc * inv + asymptotic_v(k);
    }
    acc
}

/// Ai′(x) ≈ −x^(1/4)/(2√π) e^(−ζ) Σ_{k<n} (−1)^k v_k ζ^(−k), ζ = (2/3)x^(3/2).
pub fn airy_prime_asymptotic(x: f64, n_terms: usize) -> f64 {
    let z = zeta(x);
    -libm::pow(x, 0.25) / (2.0 * libm::sqrt(PI)) * libm::exp(-z) * asymptotic_sum(z, n_terms)
}

fn check_domain(x: f64, cfg: &AiryEvalConfig) -> Result<()> {
    if !(0.0..=cfg.x_max).contains(&x) {
        return Err(Error::Domain { what: "airy_prime", value: x });
    }
    Ok(())
}

/// Ai′(x) on [0, x_max].
pub fn airy_prime(x: f64, cfg: &AiryEvalConfig) -> Result<f64> {
    check_domain(x, cfg)?;
    if x <= cfg.x_switch {
        Ok(airy_prime_maclaurin(x))
    } else {
        Ok(airy_prime_asymptotic(x, cfg.n_asymptotic_terms))
    }
}

/// A(x) = Ai′(x)/Ai′(0), with A(0) = 1 exactly.
pub fn a_ratio(x: f64, cfg: &AiryEvalConfig) -> Result<f64> {
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok(airy_prime(x, cfg)? / AIRY_PRIME_AT_ZERO)
}

/// ln A(x). Above the switch point the logarithm is taken term by term,
/// −ζ + ¼ ln x − ln(2√π |Ai′(0)|) + ln Σ, so nothing is exponentiated.
pub fn ln_a_ratio(x: f64, cfg: &AiryEvalConfig) -> Result<f64> {
    check_domain(x, cfg)?;
    if x <= cfg.x_switch {
        return Ok(libm::log(a_ratio(x, cfg)?));
    }
    let z = zeta(x);
    Ok(-z + 0.25 * libm::log(x)
        - libm::log(2.0 * libm::sqrt(PI) * libm::fabs(AIRY_PRIME_AT_ZERO))
        + libm::log(asymptotic_sum(z, cfg.n_asymptotic_terms)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma_fn(1.0).unwrap(), 1.0);
        assert!(rel(gamma_fn(0.5).unwrap(), PI.sqrt()) < 1e-15);
        assert!(rel(gamma_fn(2.0 / 3.0).unwrap(), 1.354_117_939_426_400_4) < 1e-14);
        // mpmath
        assert!(rel(gamma_fn(0.1).unwrap(), 9.513_507_698_668_73) < 1e-14);
        assert!(rel(gamma_fn(7.3).unwrap(), 1_271.423_633_663_908_7) < 1e-13);
        assert!(rel(gamma_fn(29.5).unwrap(), 1.634_812_519_827_426_7e30) < 1e-13);
        assert!(rel(gamma_fn(59.9).unwrap(), 9.217_388_786_047_855e79) < 1e-13);
        assert!(rel(gamma_fn(20.3).unwrap(), 2.972_461_075_235_572_2e17) < 1e-13);
        assert!(rel(gamma_fn(45.7).unwrap(), 3.809_221_894_156_194_6e55) < 1e-13);
        assert_eq!(gamma_fn(6.0).unwrap(), 120.0);
    }

    #[test]
    fn gamma_domain_error() {
        assert!(matches!(gamma_fn(0.0), Err(Error::Domain { .. })));
        assert!(gamma_fn(-1.5).is_err());
        assert!(gamma_fn(f64::NAN).is_err());
    }

    #[test]
    fn gamma_reflection_one_third() {
        let p = gamma_fn(1.0 / 3.0).unwrap() * gamma_fn(2.0 / 3.0).unwrap();
        assert!(rel(p, 2.0 * PI / 3f64.sqrt()) < 1e-14);
    }

    #[test]
    fn gamma_against_statrs() {
        for i in 1..600 {
            let x = i as f64 * 0.1;
            let g = gamma_fn(x).unwrap();
            // statrs is itself only good to ~1e-13 here
            assert!(rel(g, statrs::function::gamma::gamma(x)) < 1e-12, "x={x}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn gamma_recurrence(x in 0.1f64..30.0) {
            let lhs = gamma_fn(x + 1.0).unwrap();
            let rhs = x * gamma_fn(x).unwrap();
            prop_assert!(rel(lhs, rhs) < 1e-13);
        }

        #[test]
        fn gamma_reflection(x in 0.1f64..0.9) {
            let p = gamma_fn(x).unwrap() * gamma_fn(1.0 - x).unwrap();
            prop_assert!(rel(p, PI / (PI * x).sin()) < 1e-13);
        }
    }

    #[test]
    fn digamma_values() {
        let g = crate::constants::build_constants().euler_gamma;
        assert!((digamma_half_int(6).unwrap() - (1.5 - g)).abs() < 1e-15);
        assert!((digamma_half_int(6).unwrap() - 0.922_784_335_098_467_1).abs() < 1e-15);
        assert!((digamma_half_int(1).unwrap() - (-g - 2.0 * LN_2)).abs() < 1e-15);
        assert!((digamma_half_int(7).unwrap() - 1.103_156_640_645_243_2).abs() < 1e-15);
        assert!(digamma_half_int(0).is_err());
    }

    #[test]
    fn digamma_against_statrs() {
        for two_x in 1..120u32 {
            let x = two_x as f64 / 2.0;
            let d = digamma_half_int(two_x).unwrap();
            assert!((d - statrs::function::gamma::digamma(x)).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn digamma_recurrence_on_grid() {
        for two_x in 1..58u32 {
            let x = two_x as f64 / 2.0;
            let lhs = digamma_half_int(two_x + 2).unwrap();
            let rhs = digamma_half_int(two_x).unwrap() + 1.0 / x;
            assert!((lhs - rhs).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn airy_prime_at_origin() {
        let cfg = AiryEvalConfig::default();
        let v = airy_prime(0.0, &cfg).unwrap();
        let c = crate::constants::build_constants();
        assert_eq!(v, c.aip0);
        assert!(rel(v, -3f64.powf(-1.0 / 3.0) / c.gamma_one_third) < 1e-15);
    }

    // Frozen from mpmath.airyai(x, derivative=1) at 50 digits.
    const REFERENCE: [(f64, f64); 12] = [
        (0.5, -0.224_910_532_664_683_9),
        (1.0, -0.159_147_441_296_793_2),
        (2.0, -0.053_090_384_433_653_63),
        (3.0, -0.011_912_976_705_951_319),
        (4.0, -0.001_958_640_950_204_179),
        (4.5, -0.000_717_866_567_557_508_9),
        (5.0, -0.000_247_413_890_868_462_5),
        (6.0, -2.476_520_039_703_495_5e-5),
        (7.0, -2.008_150_894_738_792e-6),
        (9.0, -7.480_641_389_658_946e-9),
        (10.0, -3.520_633_676_738_923_7e-10),
        (12.0, -4.854_736_554_985_309e-13),
    ];

    #[test]
    fn airy_prime_reference_values() {
        let cfg = AiryEvalConfig::default();
        for (x, want) in REFERENCE {
            let got = airy_prime(x, &cfg).unwrap();
            assert!(rel(got, want) < 1e-11, "x={x} got={got} want={want} rel={}", rel(got, want));
        }
    }

    #[test]
    fn branches_agree_around_switch() {
        let cfg = AiryEvalConfig::default();
        for i in 0..=20 {
            let x = cfg.x_switch - 0.5 + i as f64 * 0.05;
            let m = airy_prime_maclaurin(x);
            let a = airy_prime_asymptotic(x, cfg.n_asymptotic_terms);
            assert!(rel(a, m) < 1e-10, "x={x} rel={}", rel(a, m));
        }
    }

    #[test]
    fn a_ratio_shape() {
        let cfg = AiryEvalConfig::default();
        assert_eq!(a_ratio(0.0, &cfg).unwrap(), 1.0);
        let a1 = a_ratio(1.0, &cfg).unwrap();
        assert!(rel(a1, -0.159_147_441_296_793_2 / -0.258_819_403_792_806_8) < 1e-12);
        assert!(a_ratio(2.0, &cfg).unwrap() < a1);
        let mut prev = 1.0;
        for i in 1..=1000 {
            let x = cfg.x_max * i as f64 / 1000.0;
            let a = a_ratio(x, &cfg).unwrap();
            assert!(a > 0.0 && a < prev, "x={x}");
            prev = a;
        }
    }

    #[test]
    fn ln_a_matches_log_of_a() {
        let cfg = AiryEvalConfig::default();
        for x in [0.5, 3.0, 8.5, 10.0, 12.0] {
            let l = ln_a_ratio(x, &cfg).unwrap();
            let direct = a_ratio(x, &cfg).unwrap().ln();
            assert!((l - direct).abs() < 1e-11 * direct.abs(), "x={x}");
        }
    }

    #[test]
    fn domain_errors() {
        let cfg = AiryEvalConfig::default();
        assert!(airy_prime(-0.1, &cfg).is_err());
        assert!(airy_prime(12.5, &cfg).is_err());
        assert!(a_ratio(f64::NAN, &cfg).is_err());
    }

    #[test]
    fn config_validation() {
        AiryEvalConfig::default().validate().unwrap();
        let bad = AiryEvalConfig { x_switch: 13.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = AiryEvalConfig { n_asymptotic_terms: 0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = AiryEvalConfig { x_switch: 2.0, n_asymptotic_terms: 20, ..Default::default() };
        assert!(bad.validate().is_err());
    }
}
