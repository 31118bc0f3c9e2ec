use airylog_core::bell::bell_table;
use airylog_core::PowerSeries;
use proptest::prelude::*;

/// B_{n,k}(x) by enumerating every set partition of {1..n} as a restricted
/// growth string and multiplying x_{|block|} over its blocks.
fn bell_by_partitions(n: usize, x: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    if n == 0 {
        out[0] = 1.0;
        return out;
    }
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().max().unwrap() + 1;
        let mut sizes = vec![0usize; blocks];
        for &b in &rgs {
            sizes[b] += 1;
        }
        out[blocks] += sizes.iter().map(|&s| x[s - 1]).product::<f64>();
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

#[test]
fn enumeration_oracle_small_cases() {
    let ones = [1.0; 8];
    assert_eq!(bell_by_partitions(4, &ones)[2], 7.0);
    assert_eq!(bell_by_partitions(5, &ones).iter().sum::<f64>(), 52.0);
}

#[test]
fn unit_arguments_give_stirling_and_bell_numbers() {
    let t = bell_table(&[1.0; 10], 10).unwrap();
    assert_eq!(t.get(4, 2), 7.0);
    let bell = [1.0, 1.0, 2.0, 5.0, 15.0, 52.0, 203.0, 877.0, 4140.0, 21147.0, 115975.0];
    for (n, &b) in bell.iter().enumerate() {
        assert_eq!(t.row_sum(n), b, "n={n}");
    }
}

#[test]
fn faa_di_bruno_reproduces_composition() {
    // f = exp, g(t) = t + t²: (f∘g)^(n)(0) = Σ_k f^(k)(g(0)) B_{n,k}(g′(0), g″(0), …)
    let n = 12;
    let mut g_derivs = vec![0.0; n];
    g_derivs[0] = 1.0;
    g_derivs[1] = 2.0;
    let t = bell_table(&g_derivs, n).unwrap();

    let mut e = vec![1.0; n + 1];
    for j in 1..=n {
        e[j] = e[j - 1] / j as f64;
    }
    let mut inner = vec![0.0; n + 1];
    inner[1] = 1.0;
    inner[2] = 1.0;
    let composed = PowerSeries::new(e).compose(&PowerSeries::new(inner)).unwrap();

    let mut fact = 1.0;
    for m in 1..=n {
        fact *= m as f64;
        let via_bell = t.row_sum(m);
        let via_series = composed.coeff(m) * fact;
        assert!((via_bell - via_series).abs() <= 1e-12 * via_series.abs(), "m={m}");
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn matches_partition_enumeration(x in proptest::collection::vec(-2.0f64..2.0, 8)) {
        let t = bell_table(&x, 8).unwrap();
        for n in 0..=8 {
            let brute = bell_by_partitions(n, &x);
            for k in 0..=n {
                let scale = brute[k].abs().max(1.0);
                prop_assert!((t.get(n, k) - brute[k]).abs() <= 1e-12 * scale, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn degree_scaling(x in proptest::collection::vec(-2.0f64..2.0, 8), alpha in -3.0f64..3.0) {
        let t = bell_table(&x, 8).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| alpha * v).collect();
        let ts = bell_table(&scaled, 8).unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                let want = alpha.powi(k as i32) * t.get(n, k);
                prop_assert!(rel(ts.get(n, k), want) <= 1e-12 || (ts.get(n, k) - want).abs() < 1e-12,
                    "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn weight_scaling(x in proptest::collection::vec(-2.0f64..2.0, 8), alpha in -3.0f64..3.0) {
        let t = bell_table(&x, 8).unwrap();
        let scaled: Vec<f64> = x.iter().enumerate().map(|(j, v)| alpha.powi(j as i32 + 1) * v).collect();
        let ts = bell_table(&scaled, 8).unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                let want = alpha.powi(n as i32) * t.get(n, k);
                prop_assert!(rel(ts.get(n, k), want) <= 1e-12 || (ts.get(n, k) - want).abs() < 1e-12,
                    "n={} k={}", n, k);
            }
        }
    }
}
