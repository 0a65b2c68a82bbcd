//! Exact arithmetic in the cyclotomic field `Q(xi)` with `xi` a primitive
//! r-th root of unity, represented as residues mod the r-th cyclotomic
//! polynomial. Only ring operations and conjugation are needed here; the
//! one division in character decompositions is by a rational group order.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of a monic `Q[x]` polynomial, lowest degree first.
type Poly = Vec<BigRational>;

fn poly_trim(p: &mut Poly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(mut a: Poly, m: &Poly) -> Poly {
    let deg_m = m.len() - 1;
    while a.len() > deg_m {
        let lead = a.last().unwrap().clone();
        let shift = a.len() - 1 - deg_m;
        if !lead.is_zero() {
            for (i, c) in m.iter().enumerate() {
                let delta = &lead * c;
                a[shift + i] -= delta;
            }
        }
        a.pop();
        poly_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Exact quotient of `a` by monic `b` (panics when the division is inexact;
/// only used building cyclotomic polynomials where it never is).
fn poly_div_exact(mut a: Poly, b: &Poly) -> Poly {
    let deg_b = b.len() - 1;
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(deg_b)];
    while a.len() > deg_b {
        let lead = a.last().unwrap().clone();
        let shift = a.len() - 1 - deg_b;
        q[shift] = lead.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = &lead * c;
            a[shift + i] -= delta;
        }
        poly_trim(&mut a);
    }
    assert!(a.is_empty(), "inexact polynomial division");
    q
}

/// The r-th cyclotomic polynomial, by dividing `x^r - 1` by the cyclotomic
/// polynomials of the proper divisors.
fn cyclotomic_poly(r: usize) -> Poly {
    assert!(r >= 1);
    let mut num: Poly = vec![BigRational::zero(); r + 1];
    num[0] = -BigRational::one();
    num[r] = BigRational::one();
    let mut out = num;
    for d in 1..r {
        if r % d == 0 {
            out = poly_div_exact(out, &cyclotomic_poly(d));
        }
    }
    out
}

struct Context {
    degree: usize,
    /// `xi^t` reduced mod the cyclotomic polynomial, for `t` up to the
    /// largest power a product of two residues can reach.
    xi_powers: Vec<Vec<BigRational>>,
}

impl Context {
    fn build(r: usize) -> Context {
        let phi = cyclotomic_poly(r);
        let degree = phi.len() - 1;
        let max_power = (2 * degree).max(r);
        let mut xi_powers = Vec::with_capacity(max_power + 1);
        for t in 0..=max_power {
            let mut x_t = vec![BigRational::zero(); t + 1];
            x_t[t] = BigRational::one();
            let mut red = poly_rem(x_t, &phi);
            red.resize(degree, BigRational::zero());
            xi_powers.push(red);
        }
        Context { degree, xi_powers }
    }
}

fn with_context<T>(r: usize, f: impl FnOnce(&Context) -> T) -> T {
    static CACHE: OnceLock<Mutex<Vec<Option<&'static Context>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap();
    if guard.len() <= r {
        guard.resize(r + 1, None);
    }
    if guard[r].is_none() {
        guard[r] = Some(Box::leak(Box::new(Context::build(r))));
    }
    let ctx = guard[r].unwrap();
    drop(guard);
    f(ctx)
}

/// An element of `Q(xi_r)`: rational coordinates over `1, xi, ...,
/// xi^{phi(r)-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    r: usize,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(r: usize) -> Self {
        let degree = with_context(r, |c| c.degree);
        CyclotomicNumber {
            r,
            coeffs: vec![BigRational::zero(); degree],
        }
    }

    pub fn one(r: usize) -> Self {
        Self::from_rational(r, BigRational::one())
    }

    pub fn from_rational(r: usize, value: BigRational) -> Self {
        let mut out = Self::zero(r);
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(r: usize, value: i64) -> Self {
        Self::from_rational(r, BigRational::from_integer(value.into()))
    }

    /// `xi^t`.
    pub fn root_power(r: usize, t: usize) -> Self {
        with_context(r, |c| CyclotomicNumber {
            r,
            coeffs: c.xi_powers[t % r].clone(),
        })
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `Some(q)` when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        CyclotomicNumber {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        CyclotomicNumber {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            r: self.r,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CyclotomicNumber {
            r: self.r,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        with_context(self.r, |ctx| {
            let mut acc = vec![BigRational::zero(); ctx.degree];
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.coeffs.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    for (t, c) in ctx.xi_powers[i + j].iter().enumerate() {
                        if !c.is_zero() {
                            acc[t] += &prod * c;
                        }
                    }
                }
            }
            CyclotomicNumber {
                r: self.r,
                coeffs: acc,
            }
        })
    }

    /// Complex conjugation: `xi -> xi^{r-1}`.
    pub fn conj(&self) -> Self {
        with_context(self.r, |ctx| {
            let mut acc = vec![BigRational::zero(); ctx.degree];
            for (j, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let t = (j * (self.r - 1)) % self.r;
                for (s, c) in ctx.xi_powers[t].iter().enumerate() {
                    if !c.is_zero() {
                        acc[s] += a * c;
                    }
                }
            }
            CyclotomicNumber {
                r: self.r,
                coeffs: acc,
            }
        })
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*xi")?,
                _ => write!(f, "{c}*xi^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        // phi_1 = x - 1, phi_2 = x + 1, phi_3 = x^2+x+1, phi_4 = x^2+1,
        // phi_6 = x^2-x+1
        let as_i64 = |p: Poly| -> Vec<i64> {
            p.iter()
                .map(|c| {
                    assert!(c.is_integer());
                    let n: num_bigint::BigInt = c.to_integer();
                    i64::try_from(&n).unwrap()
                })
                .collect()
        };
        assert_eq!(as_i64(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(6)), vec![1, -1, 1]);
    }

    #[test]
    fn root_powers_cycle() {
        for r in 1..=6usize {
            let xi = CyclotomicNumber::root_power(r, 1);
            let mut acc = CyclotomicNumber::one(r);
            for t in 0..r {
                assert_eq!(acc, CyclotomicNumber::root_power(r, t), "r={r} t={t}");
                // xi^t != 1 for 0 < t < r
                if t > 0 {
                    assert_ne!(acc, CyclotomicNumber::one(r));
                }
                acc = acc.mul(&xi);
            }
            assert_eq!(acc, CyclotomicNumber::one(r));
        }
    }

    #[test]
    fn geometric_sum_vanishes() {
        for r in 2..=6usize {
            let mut sum = CyclotomicNumber::zero(r);
            for t in 0..r {
                sum = sum.add(&CyclotomicNumber::root_power(r, t));
            }
            assert!(sum.is_zero(), "r={r}");
        }
    }

    #[test]
    fn conjugation_is_inverse_root() {
        for r in 1..=6usize {
            for t in 0..r {
                let a = CyclotomicNumber::root_power(r, t);
                assert_eq!(a.conj(), CyclotomicNumber::root_power(r, (r - t) % r));
                // norm of a root of unity is 1
                assert_eq!(a.mul(&a.conj()), CyclotomicNumber::one(r));
            }
        }
    }

    #[test]
    fn rational_detection() {
        let a = CyclotomicNumber::from_integer(3, 5);
        assert_eq!(a.as_rational(), Some(BigRational::from_integer(5.into())));
        let xi = CyclotomicNumber::root_power(3, 1);
        assert_eq!(xi.as_rational(), None);
        // xi + conj(xi) = -1 for r = 3
        let trace = xi.add(&xi.conj());
        assert_eq!(
            trace.as_rational(),
            Some(BigRational::from_integer((-1).into()))
        );
    }
}
