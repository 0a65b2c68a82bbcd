//! Exact symmetric-polynomial arithmetic in a fixed number of variables:
//! Schur, elementary, homogeneous and ribbon-Schur polynomials, expansion
//! into the Schur basis, and the omega involution.
//!
//! Coefficients are `BigRational` throughout; no floating point.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::tableaux::for_each_skew_ssyt;

/// Guard for the SSYT-enumeration backed constructors.
const MAX_RIBBON_BOXES: usize = 12;

/// A polynomial in `Q[x_1..x_m]`, stored as a map from exponent vectors to
/// nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultiPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigRational::one())
    }

    pub fn monomial(exponents: Vec<usize>, coeff: BigRational) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        MultiPolynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[usize]) -> BigRational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Total degree of the highest term; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, coeff: BigRational) {
        assert_eq!(exponents.len(), self.nvars, "exponent arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MultiPolynomial {
        if c.is_zero() {
            return MultiPolynomial::zero(self.nvars);
        }
        MultiPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPolynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// The polynomial with variables `i` and `j` (0-based) swapped.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPolynomial {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i, j);
            terms.insert(e2, c.clone());
        }
        MultiPolynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Symmetry under all adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i - 1, i) == *self)
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &a) in e.iter().enumerate() {
                if a == 1 {
                    write!(f, "*x{}", i + 1)?;
                } else if a > 1 {
                    write!(f, "*x{}^{}", i + 1, a)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Schur polynomial `s_lambda(x_1..x_m)` via SSYT enumeration; zero when
/// `lambda` has more than `m` rows.
pub fn schur(lambda: &Partition, nvars: usize) -> MultiPolynomial {
    skew_schur(lambda, &Partition::empty(), nvars)
}

/// Skew Schur polynomial `s_{outer/inner}(x_1..x_m)`.
pub fn skew_schur(outer: &Partition, inner: &Partition, nvars: usize) -> MultiPolynomial {
    let mut out = MultiPolynomial::zero(nvars);
    for_each_skew_ssyt(outer, inner, nvars, |rows| {
        let mut e = vec![0usize; nvars];
        for row in rows {
            for &v in row {
                e[v - 1] += 1;
            }
        }
        out.add_term(e, BigRational::one());
    });
    out
}

/// Elementary symmetric polynomial `e_d` in the scaled variables `x_i^r`;
/// `r = 1` gives the classical `e_d`. Zero when `d > m`.
pub fn elementary(d: usize, nvars: usize, r: usize) -> MultiPolynomial {
    assert!(r >= 1, "power scale must be positive");
    if d > nvars {
        return MultiPolynomial::zero(nvars);
    }
    if d == 0 {
        return MultiPolynomial::one(nvars);
    }
    let mut out = MultiPolynomial::zero(nvars);
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        let mut e = vec![0usize; nvars];
        for &i in &subset {
            e[i] = r;
        }
        out.add_term(e, BigRational::one());
        // next d-combination of {0..nvars-1}
        let mut i = d;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if subset[i] + 1 <= nvars - (d - i) {
                subset[i] += 1;
                for j in i + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// `e_mu = e_{mu_1} e_{mu_2} ...` in scaled variables; zero when a part
/// exceeds the variable count.
pub fn elementary_product(mu: &Partition, nvars: usize, r: usize) -> MultiPolynomial {
    if mu.parts().iter().any(|&p| p > nvars) {
        return MultiPolynomial::zero(nvars);
    }
    let mut out = MultiPolynomial::one(nvars);
    for &part in mu.parts() {
        out = out.mul(&elementary(part, nvars, r));
    }
    out
}

/// Complete homogeneous polynomial `h_d`: all monomials of total degree `d`.
pub fn homogeneous(d: usize, nvars: usize) -> MultiPolynomial {
    let mut out = MultiPolynomial::zero(nvars);
    if nvars == 0 {
        if d == 0 {
            return MultiPolynomial::one(0);
        }
        return out;
    }
    let mut e = vec![0usize; nvars];
    fn rec(slot: usize, remaining: usize, e: &mut Vec<usize>, out: &mut MultiPolynomial) {
        if slot + 1 == e.len() {
            e[slot] = remaining;
            out.add_term(e.clone(), BigRational::one());
            e[slot] = 0;
            return;
        }
        for v in 0..=remaining {
            e[slot] = v;
            rec(slot + 1, remaining - v, e, out);
        }
        e[slot] = 0;
    }
    rec(0, d, &mut e, &mut out);
    out
}

/// The skew ribbon shape with the given row lengths, listed top to bottom:
/// consecutive rows overlap in exactly one column. Returns `(outer, inner)`.
pub fn ribbon_shape(rows: &[usize]) -> Result<(Partition, Partition)> {
    if rows.iter().any(|&l| l == 0) {
        return Err(Error::invalid("ribbon rows must be positive"));
    }
    let m = rows.len();
    let mut starts = vec![0usize; m];
    for i in (0..m.saturating_sub(1)).rev() {
        starts[i] = starts[i + 1] + rows[i + 1] - 1;
    }
    let outer = Partition::new((0..m).map(|i| starts[i] + rows[i]).collect::<Vec<_>>())?;
    let inner = Partition::new(starts)?;
    Ok((outer, inner))
}

/// Ribbon Schur polynomial for the given row lengths (top to bottom).
pub fn ribbon_schur(rows: &[usize], nvars: usize) -> Result<MultiPolynomial> {
    let boxes: usize = rows.iter().sum();
    if boxes > MAX_RIBBON_BOXES {
        return Err(Error::ResourceLimit(format!(
            "ribbon enumeration capped at {MAX_RIBBON_BOXES} boxes; got {boxes}"
        )));
    }
    let (outer, inner) = ribbon_shape(rows)?;
    Ok(skew_schur(&outer, &inner, nvars))
}

/// An exact expansion in the Schur basis: shape -> rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigRational>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: BTreeMap<Partition, BigRational>) -> Self {
        let mut e = SchurExpansion { terms };
        e.terms.retain(|_, c| !c.is_zero());
        e
    }

    /// Lift an integer multiplicity table into an expansion.
    pub fn from_counts(counts: &BTreeMap<Partition, usize>) -> Self {
        SchurExpansion {
            terms: counts
                .iter()
                .filter(|(_, &c)| c > 0)
                .map(|(p, &c)| (p.clone(), BigRational::from_integer(c.into())))
                .collect(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, shape: &Partition) -> BigRational {
        self.terms
            .get(shape)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, shape: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            self.terms.remove(&shape);
        } else {
            self.terms.insert(shape, coeff);
        }
    }

    /// The omega involution: conjugate every index shape.
    pub fn omega(&self) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.conjugate(), c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is a non-negative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*s{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Number of semistandard tableaux of shape `lambda` and content `content`
/// (the Kostka number), by peeling horizontal strips from the top content
/// value down.
type KostkaMemo = std::collections::HashMap<(Vec<usize>, Vec<usize>), u64>;

fn kostka_number(lambda: &Partition, content: &[usize], memo: &mut KostkaMemo) -> u64 {
    let total: usize = content.iter().sum();
    if total != lambda.size() {
        return 0;
    }
    fn rec(shape: &[usize], j: usize, content: &[usize], memo: &mut KostkaMemo) -> u64 {
        if j == 0 {
            return if shape.iter().all(|&p| p == 0) { 1 } else { 0 };
        }
        let key = (shape.to_vec(), content[..j].to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let strip = content[j - 1];
        // remove a horizontal strip of `strip` boxes: nu interlaces shape
        let mut nu = shape.to_vec();
        fn strips(
            i: usize,
            remaining: usize,
            shape: &[usize],
            nu: &mut Vec<usize>,
            j: usize,
            content: &[usize],
            memo: &mut KostkaMemo,
        ) -> u64 {
            if i == shape.len() {
                if remaining > 0 {
                    return 0;
                }
                let trimmed: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
                return rec(&trimmed, j - 1, content, memo);
            }
            let below = if i + 1 < shape.len() { shape[i + 1] } else { 0 };
            let max_remove = (shape[i] - below).min(remaining);
            let mut acc = 0;
            for take in 0..=max_remove {
                nu[i] = shape[i] - take;
                acc += strips(i + 1, remaining - take, shape, nu, j, content, memo);
            }
            nu[i] = shape[i];
            acc
        }
        let v = strips(0, strip, shape, &mut nu, j, content, memo);
        memo.insert(key, v);
        v
    }
    let mut trimmed: Vec<usize> = lambda.parts().to_vec();
    trimmed.retain(|&p| p > 0);
    rec(&trimmed, content.len(), content, memo)
}

/// Expand a symmetric polynomial in the Schur basis by Gaussian elimination
/// against the triangular monomial-to-Schur transition: repeatedly strip
/// the dominance-maximal sorted exponent vector using Kostka rows.
///
/// Errors when the input is not symmetric or has degree above the variable
/// count (which could truncate shapes with too many rows).
pub fn schur_expand(p: &MultiPolynomial) -> Result<SchurExpansion> {
    if p.degree() > p.nvars() {
        return Err(Error::invalid(format!(
            "degree {} exceeds variable count {}; shapes could truncate",
            p.degree(),
            p.nvars()
        )));
    }
    // symmetry check and monomial-basis coordinates in one pass: every
    // exponent vector's coefficient must match its sorted representative's
    let nvars = p.nvars();
    let mut mcoords: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (e, c) in &p.terms {
        let sorted = Partition::from_multiset(e.clone());
        let rep_coeff = p.coeff(&sorted.padded(nvars));
        if &rep_coeff != c {
            return Err(Error::invalid("polynomial is not symmetric"));
        }
        mcoords.insert(sorted, rep_coeff);
    }
    // count each orbit once and sanity-check the orbit sizes add up
    let orbit_total: usize = mcoords.keys().map(|lam| orbit_size(lam, nvars)).sum();
    if orbit_total != p.num_terms() {
        return Err(Error::invalid("polynomial is not symmetric"));
    }
    let mut out = SchurExpansion::new();
    let mut memo = KostkaMemo::new();
    while let Some((lead, coeff)) = mcoords.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        // subtract coeff * (Kostka row of lead) from the m-coordinates;
        // every affected shape is dominance-below lead, hence lex-below
        for mu in crate::combinatorics::partitions_of(lead.size()) {
            if mu == lead || mu.len() > nvars {
                continue;
            }
            let k = kostka_number(&lead, mu.parts(), &mut memo);
            if k == 0 {
                continue;
            }
            let delta = &coeff * BigRational::from_integer(k.into());
            match mcoords.entry(mu) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        out.insert(lead, coeff);
    }
    Ok(out)
}

/// Number of distinct rearrangements of the padded part multiset of
/// `lambda` across `nvars` slots.
fn orbit_size(lambda: &Partition, nvars: usize) -> usize {
    let padded = lambda.padded(nvars);
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for v in padded {
        *mult.entry(v).or_insert(0) += 1;
    }
    let mut size = 1usize;
    let mut used = 0usize;
    // multinomial computed incrementally to stay in usize range
    for (_, m) in mult {
        for i in 1..=m {
            used += 1;
            size = size * used / i;
        }
    }
    size
}
