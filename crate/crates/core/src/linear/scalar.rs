//! Exact scalars: residues modulo a prime and arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};

/// The base field: `F_p` for a prime `p`, or `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Prime(u32),
    Rational,
}

impl Field {
    /// Builds `F_p`, rejecting non-primes.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(HopfError::Domain(format!("{p} is not a prime")));
        }
        Ok(Field::Prime(p))
    }

    /// `0` selects `Q`, anything else must be a prime.
    pub fn from_characteristic(c: u32) -> Result<Self> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp {
                value: v.rem_euclid(*p as i64) as u32,
                modulus: *p,
            },
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// `(-1)^e` in this field.
    pub fn sign(&self, odd: bool) -> Scalar {
        if odd {
            self.from_i64(-1)
        } else {
            self.one()
        }
    }

    /// Every element of the field, when it is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some((0..*p as i64).map(|v| self.from_i64(v)).collect()),
            Field::Rational => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Residues are kept in `[0, p)`; rationals are
/// normalized by `num-rational` (lowest terms, positive denominator).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { value: u32, modulus: u32 },
    Q(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
            Scalar::Q(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } => *value == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } => *value == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
            Scalar::Q(q) => Scalar::Q(q.recip()),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer representative: the residue in `[0, p)`, or the numerator of
    /// an integral rational. `None` for non-integral rationals or overflow.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Fp { value, .. } => Some(*value as i64),
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
        }
    }

    /// True when printing needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => Scalar::Fp {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => Scalar::Fp {
                value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => Scalar::Fp {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
            Scalar::Q(q) => Scalar::Q(-q),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { value, .. } => write!(f, "{value}"),
            Scalar::Q(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_stay_reduced() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, f.from_i64(4));
        assert_eq!(&a * &a.inverse().unwrap(), f.one());
        assert_eq!(f.from_i64(3).pow(6), f.one());
    }

    #[test]
    fn rationals_are_exact() {
        let q = Field::Rational;
        let half = q
            .one()
            .inverse()
            .map(|_| Scalar::Q(BigRational::new(1.into(), 2.into())))
            .unwrap();
        assert_eq!(&half + &half, q.one());
        assert!((-&half).is_negative());
    }

    #[test]
    fn rejects_composites() {
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(13).is_ok());
    }

    #[test]
    fn sign_vanishes_in_characteristic_two() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.sign(true), f.one());
    }
}
