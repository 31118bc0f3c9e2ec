//! Truncated Maclaurin series.
//!
//! All operations are exact truncations: output coefficient j depends only on
//! input coefficients 0..=j, so a series of order n (n stored coefficients)
//! is correct through t^(n−1).

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<f64>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn zeros(order: usize) -> Self {
        PowerSeries { coeffs: vec![0.0; order] }
    }

    /// The series t, truncated to `order`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zeros(order);
        if order > 1 {
            s.coeffs[1] = 1.0;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Coefficient of t^j, zero beyond the truncation.
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.resize(order.min(self.order()), 0.0);
        self
    }

    /// Divides by t^n; the first n coefficients must vanish.
    pub fn shift_down(&self, n: usize) -> Result<Self> {
        if self.coeffs.iter().take(n).any(|&c| c != 0.0) {
            return Err(Error::Argument("shift_down: leading coefficients are not zero"));
        }
        Ok(PowerSeries::new(self.coeffs.iter().skip(n).copied().collect()))
    }

    /// Multiplies by t^n, keeping the order.
    pub fn shift_up(&self, n: usize) -> Self {
        let order = self.order();
        let mut out = Self::zeros(order);
        for j in n..order {
            out.coeffs[j] = self.coeffs[j - n];
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        PowerSeries::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Evaluates the truncated polynomial at t (Horner).
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// 1/f, requires f₀ ≠ 0.
    pub fn reciprocal(&self) -> Result<Self> {
        let n = self.order();
        let f0 = self.coeff(0);
        if f0 == 0.0 {
            return Err(Error::Argument("reciprocal of a series with zero constant term"));
        }
        let mut g = vec![0.0; n];
        if n > 0 {
            g[0] = 1.0 / f0;
        }
        for j in 1..n {
            let s: f64 = (1..=j).map(|i| self.coeffs[i] * g[j - i]).sum();
            g[j] = -s / f0;
        }
        Ok(PowerSeries::new(g))
    }

    /// √f, requires f₀ > 0. Solves g² = f order by order.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        let f0 = self.coeff(0);
        if !(f0 > 0.0) {
            return Err(Error::Argument("sqrt of a series with non-positive constant term"));
        }
        let mut g = vec![0.0; n];
        if n > 0 {
            g[0] = libm::sqrt(f0);
        }
        for j in 1..n {
            let cross: f64 = (1..j).map(|i| g[i] * g[j - i]).sum();
            g[j] = (self.coeffs[j] - cross) / (2.0 * g[0]);
        }
        Ok(PowerSeries::new(g))
    }

    /// f(g(t)) for an inner series with g₀ = 0, truncated to the outer order.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self> {
        if inner.coeff(0) != 0.0 {
            return Err(Error::Argument("compose: inner series must vanish at 0"));
        }
        let n = self.order();
        let inner = inner.clone().truncate(n);
        let inner = if inner.order() < n {
            let mut c = inner.into_coeffs();
            c.resize(n, 0.0);
            PowerSeries::new(c)
        } else {
            inner
        };
        let mut acc = Self::zeros(n);
        for &c in self.coeffs.iter().rev() {
            acc = &acc * &inner;
            if n > 0 {
                acc.coeffs[0] += c;
            }
        }
        Ok(acc)
    }

    /// Compositional inverse: given w(t) with w₀ = 0 and w₁ ≠ 0, returns
    /// x(w) with w(x(w)) = w through the same order.
    ///
    /// Coefficients are fixed one order at a time: with x truncated below
    /// wⁿ, the wⁿ coefficient of w(x(w)) must vanish, and x_n enters it only
    /// through the linear term w₁ x_n.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        let w1 = self.coeff(1);
        if self.coeff(0) != 0.0 || w1 == 0.0 {
            return Err(Error::Argument("revert needs w₀ = 0 and w₁ ≠ 0"));
        }
        let mut x = Self::zeros(n);
        x.coeffs[1] = 1.0 / w1;
        for j in 2..n {
            let head = self.clone().truncate(j + 1);
            let composed = head.compose(&x.clone().truncate(j + 1))?;
            x.coeffs[j] = -composed.coeff(j) / w1;
        }
        Ok(x)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..n).map(|j| self.coeffs[j] + rhs.coeffs[j]).collect())
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..n).map(|j| self.coeffs[j] - rhs.coeffs[j]).collect())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![0.0; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries::new(out)
    }
}
