//! Truncated formal power series in `t` with exact `i128` coefficients.
//!
//! Every operation works modulo `t^(M+1)` and reports overflow instead of
//! wrapping.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSeries {
    coeffs: Vec<i128>,
}

impl PowerSeries {
    /// The series 1 truncated at degree `max_degree`.
    pub fn one(max_degree: usize) -> Self {
        let mut coeffs = vec![0; max_degree + 1];
        coeffs[0] = 1;
        PowerSeries { coeffs }
    }

    pub fn zero(max_degree: usize) -> Self {
        PowerSeries {
            coeffs: vec![0; max_degree + 1],
        }
    }

    /// Coefficients beyond `max_degree` are discarded, missing ones are zero.
    pub fn from_coeffs(max_degree: usize, mut coeffs: Vec<i128>) -> Self {
        coeffs.resize(max_degree + 1, 0);
        PowerSeries { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i128 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    fn check_same_degree(&self, other: &Self) {
        assert_eq!(
            self.max_degree(),
            other.max_degree(),
            "series truncation degrees differ"
        );
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("series add")))
            .collect::<Result<_>>()?;
        Ok(PowerSeries { coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other);
        let top = self.max_degree();
        let mut out = vec![0i128; top + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=top - i].iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow("series mul"))?;
                out[i + j] = out[i + j]
                    .checked_add(prod)
                    .ok_or(Error::Overflow("series mul"))?;
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Multiply in place by the binomial `1 + sign * t^k`.
    pub fn mul_binomial(&mut self, k: usize, sign: i128) -> Result<()> {
        if k == 0 {
            return Err(Error::Invariant(
                "binomial exponent must be positive".into(),
            ));
        }
        for d in (k..self.coeffs.len()).rev() {
            let shifted = self.coeffs[d - k]
                .checked_mul(sign)
                .ok_or(Error::Overflow("series binomial"))?;
            self.coeffs[d] = self.coeffs[d]
                .checked_add(shifted)
                .ok_or(Error::Overflow("series binomial"))?;
        }
        Ok(())
    }

    /// Multiplicative inverse of a series whose constant term is ±1, via
    /// `b_0 = 1/a_0`, `b_d = -(1/a_0) * Σ_{i=1..d} a_i b_{d-i}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 != 1 && a0 != -1 {
            return Err(Error::Invariant(format!(
                "reciprocal needs a unit constant term, got {a0}"
            )));
        }
        let top = self.max_degree();
        let mut out = vec![0i128; top + 1];
        out[0] = a0;
        for d in 1..=top {
            let mut acc: i128 = 0;
            for i in 1..=d {
                let term = self.coeffs[i]
                    .checked_mul(out[d - i])
                    .ok_or(Error::Overflow("series reciprocal"))?;
                acc = acc
                    .checked_add(term)
                    .ok_or(Error::Overflow("series reciprocal"))?;
            }
            // a0 is its own inverse
            out[d] = acc
                .checked_neg()
                .and_then(|x| x.checked_mul(a0))
                .ok_or(Error::Overflow("series reciprocal"))?;
        }
        Ok(PowerSeries { coeffs: out })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sep = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.unsigned_abs();
            let body = match (d, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{mag}t"),
                (_, 1) => format!("t^{d}"),
                _ => format!("{mag}t^{d}"),
            };
            write!(f, "{sep}{body}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

/// `∏_{i=1..M} (1 + t^i)` mod `t^(M+1)`; the generating function of strict
/// partitions.
pub fn series_product_strict(max_degree: usize) -> Result<PowerSeries> {
    let mut s = PowerSeries::one(max_degree);
    for i in 1..=max_degree {
        s.mul_binomial(i, 1)?;
    }
    Ok(s)
}

/// `∏_{odd i <= M} 1/(1 - t^i)` mod `t^(M+1)`; the generating function of
/// partitions into odd parts.
pub fn series_product_odd(max_degree: usize) -> Result<PowerSeries> {
    let mut denom = PowerSeries::one(max_degree);
    for i in (1..=max_degree).step_by(2) {
        denom.mul_binomial(i, -1)?;
    }
    denom.reciprocal()
}
