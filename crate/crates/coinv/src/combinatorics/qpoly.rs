//! Polynomials in a single variable `q` with integer coefficients, and the
//! Gaussian binomial coefficients built from them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

/// Coefficients stored lowest power first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// `c * q^power`
    pub fn monomial(c: i64, power: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = c;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the top nonzero term; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Evaluation at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Substitute `q -> q^r`.
    pub fn subst_power(&self, r: usize) -> QPolynomial {
        assert!(r >= 1);
        let mut coeffs = vec![0; self.coeffs.len().saturating_mul(r)];
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                coeffs[d * r] = c;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn scale(&self, c: i64) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![0; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        *self = &*self + rhs;
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.unsigned_abs();
            match d {
                0 => write!(f, "{a}")?,
                1 => {
                    if a == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "{a}q")?;
                    }
                }
                _ => {
                    if a == 1 {
                        write!(f, "q^{d}")?;
                    } else {
                        write!(f, "{a}q^{d}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Gaussian binomial `[a choose b]_q`; zero polynomial when `b > a`.
///
/// Computed by the q-Pascal recurrence, so the coefficient of `q^d` counts
/// partitions of `d` inside a `b x (a-b)` box.
pub fn q_binomial(a: usize, b: usize) -> QPolynomial {
    if b > a {
        return QPolynomial::zero();
    }
    // row-by-row q-Pascal: [m choose j] = [m-1 choose j-1] + q^j [m-1 choose j]
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for m in 1..=a {
        let width = m.min(b);
        let mut next: Vec<QPolynomial> = Vec::with_capacity(width + 1);
        next.push(QPolynomial::one());
        for j in 1..=width {
            let from_left = row.get(j - 1).cloned().unwrap_or_else(QPolynomial::zero);
            let from_up = row.get(j).cloned().unwrap_or_else(QPolynomial::zero);
            next.push(&from_left + &(&QPolynomial::monomial(1, j) * &from_up));
        }
        row = next;
    }
    row[b].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of_bounded;

    #[test]
    fn small_q_binomials() {
        assert_eq!(q_binomial(2, 1).coeffs(), &[1, 1]);
        assert_eq!(q_binomial(4, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(q_binomial(7, 0), QPolynomial::one());
        assert!(q_binomial(2, 3).is_zero());
    }

    #[test]
    fn counts_partitions_in_box() {
        for a in 0..=8usize {
            for b in 0..=a {
                let gb = q_binomial(a, b);
                for d in 0..=b * (a - b) + 1 {
                    let count = partitions_of_bounded(d, b, a - b).len() as i64;
                    assert_eq!(gb.coeff(d), count, "a={a} b={b} d={d}");
                }
            }
        }
    }

    #[test]
    fn palindromic_positive_and_binomial_at_one() {
        fn binom(a: usize, b: usize) -> i64 {
            let mut num = 1i64;
            for i in 0..b {
                num = num * (a - i) as i64 / (i + 1) as i64;
            }
            num
        }
        for a in 0..=12usize {
            for b in 0..=a {
                let gb = q_binomial(a, b);
                assert!(gb.coeffs().iter().all(|&c| c >= 0));
                assert!(gb.is_palindromic());
                assert_eq!(gb.eval_one(), binom(a, b));
            }
        }
    }

    #[test]
    fn subst_power() {
        let p = q_binomial(3, 1); // 1 + q + q^2
        assert_eq!(p.subst_power(2).coeffs(), &[1, 0, 1, 0, 1]);
        assert_eq!(p.subst_power(1), p);
    }
}
