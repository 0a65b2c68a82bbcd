//! Exact arithmetic in a real quadratic extension `Q(sqrt(d))` with a fixed
//! square-free `d`, and points with such coordinates.
//!
//! Rational values carry `d = 0` so that numbers from different orbits mix
//! freely as long as at most one genuine radical is involved; mixed-radical
//! data is rejected.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + b*sqrt(d)`; `d = 0` canonically encodes a plain rational (`b = 0`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticNumber {
    // field order matters for the derived lexicographic Ord only
    d: u64,
    a: BigRational,
    b: BigRational,
}

impl QuadraticNumber {
    pub fn rational(a: BigRational) -> Self {
        QuadraticNumber {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `a + b*sqrt(d)`; the radical part is dropped to canonical rational
    /// form when `b = 0` or `d` is 0 or 1.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::rational(a);
        }
        if d == 1 {
            return Self::rational(a + b);
        }
        QuadraticNumber { a, b, d }
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    fn common_d(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::invalid(format!(
                "mixed radicals sqrt({d1}) and sqrt({d2}) are not supported"
            ))),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a.clone(), -self.b.clone(), self.d)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        let radicand = BigRational::from_integer(d.into());
        let a = &self.a * &other.a + (&self.b * &other.b) * &radicand;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }

    /// Multiplicative inverse via the conjugate; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("division by zero"));
        }
        let radicand = BigRational::from_integer(self.d.into());
        let norm = &self.a * &self.a - (&self.b * &self.b) * &radicand;
        if norm.is_zero() {
            // only possible when d is a perfect square, which new() rules
            // out for d <= 1; treat as invalid input
            return Err(Error::invalid("zero norm: d is not square-free"));
        }
        Ok(Self::new(&self.a / &norm, -(&self.b / &norm), self.d))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*sqrt({})", self.b, self.d)
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A point with quadratic coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<QuadraticNumber>,
}

impl Point {
    pub fn new(coords: Vec<QuadraticNumber>) -> Result<Self> {
        let mut d = 0u64;
        for c in &coords {
            match (d, c.radicand()) {
                (0, cd) => d = cd,
                (_, 0) => {}
                (pd, cd) if pd == cd => {}
                (pd, cd) => {
                    return Err(Error::invalid(format!(
                        "point mixes sqrt({pd}) and sqrt({cd})"
                    )))
                }
            }
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[QuadraticNumber] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &QuadraticNumber {
        &self.coords[i]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, m: i64) -> BigRational {
        BigRational::new(n.into(), m.into())
    }

    #[test]
    fn arithmetic_and_norm() {
        // (1 + sqrt(10)/2) * (1 - sqrt(10)/2) = 1 - 10/4 = -3/2
        let x = QuadraticNumber::new(q(1, 1), q(1, 2), 10);
        let y = QuadraticNumber::new(q(1, 1), q(-1, 2), 10);
        let prod = x.mul(&y).unwrap();
        assert_eq!(prod, QuadraticNumber::rational(q(-3, 2)));
        // inverse round trip
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv).unwrap(), QuadraticNumber::one());
    }

    #[test]
    fn rationals_mix_with_any_radical() {
        let two = QuadraticNumber::from_integer(2);
        let root3 = QuadraticNumber::new(q(0, 1), q(1, 1), 3);
        let sum = two.add(&root3).unwrap();
        assert_eq!(sum.radicand(), 3);
        let root5 = QuadraticNumber::new(q(0, 1), q(1, 1), 5);
        assert!(root3.add(&root5).is_err());
    }

    #[test]
    fn negative_zero_is_zero() {
        let zero = QuadraticNumber::zero();
        assert_eq!(zero.neg(), zero);
        let x = QuadraticNumber::new(q(0, 1), q(1, 1), 3);
        assert!(x.sub(&x).unwrap().is_zero());
        // b = 0 canonicalizes d away
        let y = QuadraticNumber::new(q(2, 1), q(0, 1), 7);
        assert_eq!(y.radicand(), 0);
    }

    #[test]
    fn point_rejects_mixed_radicals() {
        let a = QuadraticNumber::new(q(0, 1), q(1, 1), 3);
        let b = QuadraticNumber::new(q(0, 1), q(1, 1), 5);
        assert!(Point::new(vec![a.clone(), b]).is_err());
        assert!(Point::new(vec![a.clone(), QuadraticNumber::from_integer(1), a]).is_ok());
    }
}
