//! Integer power series truncated at a fixed degree.

use std::fmt;

use crate::error::{HopfError, Result};

/// `c_0 + c_1 t + … + c_N t^N`, with every operation discarding terms
/// above `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(bound: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; bound + 1],
        }
    }

    pub fn one(bound: usize) -> Self {
        Self::monomial(bound, 0, 1)
    }

    /// `c·t^d`, or zero when `d` exceeds the bound.
    pub fn monomial(bound: usize, d: usize, c: i64) -> Self {
        let mut s = Self::zero(bound);
        if d <= bound {
            s.coeffs[d] = c;
        }
        s
    }

    /// Takes the first `bound + 1` coefficients, padding with zeros.
    pub fn from_coeffs(bound: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(bound);
        for (d, c) in coeffs.iter().take(bound + 1).enumerate() {
            s.coeffs[d] = *c;
        }
        s
    }

    /// `1 + t^d + t^{2d} + …`
    pub fn geometric(bound: usize, d: usize) -> Self {
        assert!(d > 0, "geometric series needs a positive step");
        let mut s = Self::zero(bound);
        for k in (0..=bound).step_by(d) {
            s.coeffs[k] = 1;
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn set_coeff(&mut self, d: usize, c: i64) {
        self.coeffs[d] = c;
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    fn check_bound(&self, other: &Self) -> Result<()> {
        if self.bound() != other.bound() {
            return Err(HopfError::Structural(format!(
                "series bounds differ: {} vs {}",
                self.bound(),
                other.bound()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        let n = self.bound();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.bound());
        for _ in 0..k {
            acc = acc.mul(self).expect("same bound");
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `±1` so the result
    /// stays integral.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(HopfError::Domain(format!(
                "series with constant term {c0} has no integral inverse"
            )));
        }
        let n = self.bound();
        let mut u = Self::zero(n);
        u.coeffs[0] = c0;
        for k in 1..=n {
            let s: i64 = (1..=k).map(|i| self.coeffs[i] * u.coeffs[k - i]).sum();
            u.coeffs[k] = -c0 * s;
        }
        Ok(u)
    }

    /// `s(t^q)`.
    pub fn substitute(&self, q: usize) -> Result<Self> {
        if q < 1 {
            return Err(HopfError::Domain("substitution power must be at least 1".into()));
        }
        let n = self.bound();
        let mut out = Self::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * q > n {
                break;
            }
            out.coeffs[k * q] = *c;
        }
        Ok(out)
    }

    /// The same series with a different bound (padding or cutting).
    pub fn with_bound(&self, bound: usize) -> Self {
        Self::from_coeffs(bound, &self.coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if *c < 0 { "-" } else { "+" };
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{d}")?,
                _ => write!(f, "{a}t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let s = TruncatedSeries::from_coeffs(5, &[1, -1]);
        assert_eq!(s.inverse().unwrap().coeffs(), &[1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn compositions_into_even_parts() {
        // 1 / (1 - t^2/(1-t^2)) = (1-t^2)/(1-2t^2)
        let n = 8;
        let a = TruncatedSeries::geometric(n, 2).sub(&TruncatedSeries::one(n)).unwrap();
        let s = TruncatedSeries::one(n).sub(&a).unwrap().inverse().unwrap();
        assert_eq!(s.coeffs(), &[1, 0, 1, 0, 2, 0, 4, 0, 8]);
    }

    #[test]
    fn inverse_is_an_involution() {
        let s = TruncatedSeries::from_coeffs(7, &[1, 3, -2, 0, 5]);
        assert_eq!(s.inverse().unwrap().inverse().unwrap(), s);
        assert!(TruncatedSeries::from_coeffs(3, &[2, 1]).inverse().is_err());
    }

    #[test]
    fn substitution() {
        let s = TruncatedSeries::from_coeffs(4, &[0, 1, 1]);
        assert_eq!(s.substitute(2).unwrap().coeffs(), &[0, 0, 1, 0, 1]);
        assert_eq!(s.substitute(1).unwrap(), s);
        assert!(s.substitute(0).is_err());
        let even = TruncatedSeries::geometric(8, 2).sub(&TruncatedSeries::one(8)).unwrap();
        assert_eq!(even.substitute(2).unwrap().coeffs(), &[0, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_coeffs(4, &[1, 0, -2, 0, 1]);
        assert_eq!(s.to_string(), "1 - 2t^2 + t^4");
    }
}
