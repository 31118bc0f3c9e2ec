//! Incomplete (partial exponential) Bell polynomials B_{n,k}(x₁, …, x_{n−k+1}).
//!
//! Filled as a triangle with
//!
//! ```text
//! B_{0,0} = 1,   B_{n,0} = 0 (n ≥ 1),
//! B_{n,k} = Σ_{j=1}^{n−k+1} C(n−1, j−1) x_j B_{n−j, k−1}.
//! ```
//!
//! Binomials are formed by the multiplicative rule in f64. They stay exact
//! through row 60 or so, which is why `n_max` is capped at 64.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const BELL_N_MAX: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct BellTable {
    n_max: usize,
    // row n occupies values[n(n+1)/2 .. n(n+1)/2 + n + 1]
    values: Vec<f64>,
}

impl BellTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// B_{n,k}; zero for k > n. Panics if n > n_max.
    pub fn get(&self, n: usize, k: usize) -> f64 {
        assert!(n <= self.n_max, "row {n} beyond n_max {}", self.n_max);
        if k > n {
            return 0.0;
        }
        self.values[n * (n + 1) / 2 + k]
    }

    /// Σ_k B_{n,k}, the complete Bell polynomial of the same arguments.
    pub fn row_sum(&self, n: usize) -> f64 {
        (0..=n).map(|k| self.get(n, k)).sum()
    }
}

/// Builds B_{n,k} for 0 ≤ k ≤ n ≤ n_max from x = (x₁, x₂, …).
pub fn bell_table(x: &[f64], n_max: usize) -> Result<BellTable> {
    if n_max > BELL_N_MAX {
        return Err(Error::Argument("bell_table: n_max above 64"));
    }
    if x.len() < n_max {
        return Err(Error::Argument("bell_table: fewer arguments than n_max"));
    }
    let mut values = vec![0.0; (n_max + 1) * (n_max + 2) / 2];
    values[0] = 1.0;
    let idx = |n: usize, k: usize| n * (n + 1) / 2 + k;
    for n in 1..=n_max {
        for k in 1..=n {
            let mut acc = 0.0;
            let mut binom = 1.0; // C(n−1, j−1)
            for j in 1..=(n - k + 1) {
                let prev = values[idx(n - j, k - 1)];
                if prev != 0.0 && x[j - 1] != 0.0 {
                    acc += binom * x[j - 1] * prev;
                }
                binom = binom * (n - j) as f64 / j as f64;
            }
            values[idx(n, k)] = acc;
        }
    }
    Ok(BellTable { n_max, values })
}
