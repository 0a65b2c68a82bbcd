//! Vanishing ideals of finite point sets and their top-degree ideals: the
//! reflection group `D_n`, point orbits, indicator polynomials, the
//! top-degree map, and the null-space iteration that finds the standard
//! monomials and Hilbert series of `C[x]/T(X)`.
//!
//! Exactness: all coordinates live in a single quadratic extension
//! `Q(sqrt(d))`; the monomial order is graded reverse lexicographic with
//! `x1 > x2 > ... > xn`, recorded here because the staircase depends on it.

mod quadratic;

pub use quadratic::{Point, QuadraticNumber};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::combinatorics::QPolynomial;
use crate::error::{Error, Result};

/// Desk-scale guards.
const MAX_POINTS: usize = 64;
const MAX_VARS: usize = 4;
const MAX_DN_RANK: usize = 5;

/// A signed permutation `x_i -> sign_i * x_{perm_i}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::SizeMismatch {
                left: signs.len(),
                right: n,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[v] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::invalid("signs must be +1 or -1"));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    /// Image of a point: coordinate `i` reads `sign_i * p_{perm_i}`.
    pub fn apply(&self, p: &Point) -> Result<Point> {
        let coords = (0..self.n())
            .map(|i| {
                let c = p.coord(self.perm[i] - 1).clone();
                if self.signs[i] == 1 {
                    c
                } else {
                    c.neg()
                }
            })
            .collect();
        Point::new(coords)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(
                f,
                "{}{}",
                if self.signs[i] < 0 { "-" } else { "" },
                self.perm[i]
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `2^{n-1} n!` elements of the type-D reflection group: signed
/// permutations with an even number of sign changes.
pub fn dn_elements(n: usize) -> Result<Vec<SignedPermutation>> {
    if n > MAX_DN_RANK {
        return Err(Error::ResourceLimit(format!(
            "D_n enumeration capped at rank {MAX_DN_RANK}"
        )));
    }
    let mut out = Vec::new();
    for perm in crate::combinatorics::all_permutations(n) {
        let mut signs = vec![1i8; n];
        loop {
            if signs.iter().product::<i8>() == 1 {
                out.push(SignedPermutation {
                    perm: perm.word().to_vec(),
                    signs: signs.clone(),
                });
            }
            let mut i = n;
            let mut done = true;
            while i > 0 {
                i -= 1;
                if signs[i] == 1 {
                    signs[i] = -1;
                    done = false;
                    break;
                }
                signs[i] = 1;
            }
            if done {
                break;
            }
        }
    }
    Ok(out)
}

/// The orbit of a point under a list of group elements, exactly deduplicated.
pub fn orbit(group: &[SignedPermutation], p: &Point) -> Result<BTreeSet<Point>> {
    let mut out = BTreeSet::new();
    for w in group {
        out.insert(w.apply(p)?);
    }
    Ok(out)
}

/// A polynomial over `Q(sqrt(d))` with the grevlex order fixed.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, QuadraticNumber>,
}

/// Graded reverse lexicographic comparison with `x1 > x2 > ... > xn`.
pub fn grevlex_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    let da: usize = a.iter().sum();
    let db: usize = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                // larger trailing exponent means smaller in grevlex
                return b[i].cmp(&a[i]);
            }
        }
        std::cmp::Ordering::Equal
    })
}

impl ExactPolynomial {
    pub fn zero(nvars: usize) -> Self {
        ExactPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QuadraticNumber) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn monomial(exps: Vec<usize>, c: QuadraticNumber) -> Self {
        let nvars = exps.len();
        let mut out = Self::zero(nvars);
        out.add_term(exps, c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &QuadraticNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: QuadraticNumber) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c).expect("single radical context");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &QuadraticNumber) -> ExactPolynomial {
        if c.is_zero() {
            return ExactPolynomial::zero(self.nvars);
        }
        ExactPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.mul(c).expect("single radical context")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &ExactPolynomial) -> ExactPolynomial {
        let mut out = ExactPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2).expect("single radical context"));
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Evaluation at a point.
    pub fn eval(&self, p: &Point) -> Result<QuadraticNumber> {
        let mut acc = QuadraticNumber::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    term = term.mul(p.coord(i))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// The grevlex-largest monomial.
    pub fn leading_monomial(&self) -> Option<&Vec<usize>> {
        self.terms.keys().max_by(|a, b| grevlex_cmp(a, b))
    }

    /// The sum of the terms of maximal total degree; errors on zero input.
    pub fn top_degree(&self) -> Result<ExactPolynomial> {
        if self.is_zero() {
            return Err(Error::invalid("top-degree form of the zero polynomial"));
        }
        let d = self.degree();
        Ok(ExactPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<usize>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }
}

impl fmt::Display for ExactPolynomial {
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
            write!(f, "({c})")?;
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

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The indicator polynomial of `x` inside `X`: 1 at `x`, 0 elsewhere on
/// `X`, built from the smallest differing coordinate against every other
/// point.
pub fn indicator(points: &[Point], x: &Point) -> Result<ExactPolynomial> {
    let n = x.dim();
    if !points.contains(x) {
        return Err(Error::invalid("the distinguished point must belong to X"));
    }
    let mut out = ExactPolynomial::constant(n, QuadraticNumber::one());
    for y in points {
        if y == x {
            continue;
        }
        let i = (0..n)
            .find(|&i| x.coord(i) != y.coord(i))
            .ok_or_else(|| Error::invalid("duplicate points in X"))?;
        // (x_i - y_i) / (x*_i - y_i)
        let denom = x.coord(i).sub(y.coord(i))?;
        let mut factor = ExactPolynomial::zero(n);
        let mut e = vec![0usize; n];
        e[i] = 1;
        factor.add_term(e, QuadraticNumber::one());
        factor.add_term(vec![0; n], y.coord(i).neg());
        out = out.mul(&factor.scale(&denom.inv()?));
    }
    Ok(out)
}

/// Incremental elimination over `Q(sqrt(d))^t` with augmentation, used to
/// detect dependent evaluation vectors and express them over the basis.
struct EvalReducer {
    ncols: usize,
    naug: usize,
    pivots: BTreeMap<usize, (Vec<QuadraticNumber>, Vec<QuadraticNumber>)>,
}

impl EvalReducer {
    fn new(ncols: usize, naug: usize) -> Self {
        EvalReducer {
            ncols,
            naug,
            pivots: BTreeMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn eliminate(
        &self,
        row: &[QuadraticNumber],
        aug: &[QuadraticNumber],
    ) -> (Vec<QuadraticNumber>, Vec<QuadraticNumber>) {
        let mut acc = row.to_vec();
        acc.resize(self.ncols, QuadraticNumber::zero());
        let mut acc_aug = aug.to_vec();
        acc_aug.resize(self.naug, QuadraticNumber::zero());
        for col in 0..self.ncols {
            if acc[col].is_zero() {
                continue;
            }
            if let Some((prow, paug)) = self.pivots.get(&col) {
                let factor = std::mem::replace(&mut acc[col], QuadraticNumber::zero());
                for (c, v) in prow.iter().enumerate() {
                    if c != col && !v.is_zero() {
                        let delta = factor.mul(v).expect("single radical context");
                        acc[c] = acc[c].sub(&delta).expect("single radical context");
                    }
                }
                for (i, a) in paug.iter().enumerate() {
                    if !a.is_zero() {
                        let delta = factor.mul(a).expect("single radical context");
                        acc_aug[i] = acc_aug[i].sub(&delta).expect("single radical context");
                    }
                }
            }
        }
        (acc, acc_aug)
    }

    /// Insert; `Ok(None)` when dependent, in which case `express` recovers
    /// the combination.
    fn insert(&mut self, row: &[QuadraticNumber], aug: Vec<QuadraticNumber>) -> Option<usize> {
        let (mut acc, mut acc_aug) = self.eliminate(row, &aug);
        let lead = (0..self.ncols).find(|&c| !acc[c].is_zero())?;
        let inv = acc[lead].inv().expect("nonzero pivot");
        for v in acc.iter_mut() {
            if !v.is_zero() {
                *v = v.mul(&inv).expect("single radical context");
            }
        }
        for a in acc_aug.iter_mut() {
            if !a.is_zero() {
                *a = a.mul(&inv).expect("single radical context");
            }
        }
        self.pivots.insert(lead, (acc, acc_aug));
        Some(lead)
    }

    /// Combination over the fed generators when the row is dependent.
    fn express(&self, row: &[QuadraticNumber]) -> Option<Vec<QuadraticNumber>> {
        let (acc, acc_aug) = self.eliminate(row, &[]);
        if acc.iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(acc_aug.into_iter().map(|a| a.neg()).collect())
    }
}

/// One generator of (a subideal of) the top-degree ideal: the top form, its
/// grevlex leading monomial, and the witness that vanishes on `X`.
pub struct TopFormGenerator {
    pub lead: Vec<usize>,
    pub top_form: ExactPolynomial,
    pub witness: ExactPolynomial,
}

/// Result of the top-degree-ideal computation.
pub struct TIdealResult {
    pub nvars: usize,
    pub staircase: Vec<Vec<usize>>,
    pub hilbert: QPolynomial,
    pub generators: Vec<TopFormGenerator>,
}

fn validate_points(points: &[Point]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::invalid("empty point set"));
    }
    let n = points[0].dim();
    if points.iter().any(|p| p.dim() != n) {
        return Err(Error::invalid("points of mixed dimension"));
    }
    if n > MAX_VARS {
        return Err(Error::ResourceLimit(format!(
            "point-ideal computations capped at {MAX_VARS} variables"
        )));
    }
    if points.len() > MAX_POINTS {
        return Err(Error::ResourceLimit(format!(
            "point-ideal computations capped at {MAX_POINTS} points"
        )));
    }
    let mut d = 0u64;
    for p in points {
        for c in p.coords() {
            match (d, c.radicand()) {
                (0, cd) => d = cd,
                (_, 0) => {}
                (pd, cd) if pd == cd => {}
                (pd, cd) => {
                    return Err(Error::invalid(format!(
                        "point set mixes sqrt({pd}) and sqrt({cd})"
                    )))
                }
            }
        }
    }
    let unique: BTreeSet<&Point> = points.iter().collect();
    if unique.len() != points.len() {
        return Err(Error::invalid("duplicate points in X"));
    }
    Ok(n)
}

fn monomials_of_degree(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut e = vec![0usize; n];
    fn rec(slot: usize, rem: usize, e: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slot + 1 == e.len() {
            e[slot] = rem;
            out.push(e.clone());
            e[slot] = 0;
            return;
        }
        for v in 0..=rem {
            e[slot] = v;
            rec(slot + 1, rem - v, e, out);
        }
        e[slot] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut e, &mut out);
    out.sort_by(|a, b| grevlex_cmp(a, b));
    out
}

fn eval_monomial(e: &[usize], p: &Point) -> Result<QuadraticNumber> {
    let mut acc = QuadraticNumber::one();
    for (i, &a) in e.iter().enumerate() {
        for _ in 0..a {
            acc = acc.mul(p.coord(i))?;
        }
    }
    Ok(acc)
}

fn divisible(m: &[usize], lead: &[usize]) -> bool {
    m.iter().zip(lead).all(|(a, b)| a >= b)
}

/// Compute generators of the top-degree ideal and the standard monomials of
/// the quotient, sweeping degree by degree and harvesting every null vector
/// of the evaluation matrix.
pub fn compute_t_ideal(points: &[Point]) -> Result<TIdealResult> {
    let n = validate_points(points)?;
    let t = points.len();
    let mut reducer = EvalReducer::new(t, t);
    let mut staircase: Vec<Vec<usize>> = Vec::new();
    // polynomials attached to the independent (standard) monomials fed so
    // far; the dependent combination is read against these
    let mut basis_polys: Vec<ExactPolynomial> = Vec::new();
    let mut leads: Vec<Vec<usize>> = Vec::new();
    let mut generators = Vec::new();
    let mut d = 0usize;
    loop {
        let mut candidates = 0usize;
        for m in monomials_of_degree(n, d) {
            if leads.iter().any(|l| divisible(&m, l)) {
                continue;
            }
            candidates += 1;
            let row: Vec<QuadraticNumber> = points
                .iter()
                .map(|p| eval_monomial(&m, p))
                .collect::<Result<_>>()?;
            let mut aug = vec![QuadraticNumber::zero(); t];
            if basis_polys.len() < t {
                aug[basis_polys.len()] = QuadraticNumber::one();
            }
            if reducer.insert(&row, aug).is_some() {
                staircase.push(m.clone());
                basis_polys.push(ExactPolynomial::monomial(m, QuadraticNumber::one()));
            } else {
                // dependent: the witness m - sum(combo) vanishes on X
                let combo = reducer
                    .express(&row)
                    .ok_or_else(|| Error::Internal("dependent row failed to express".into()))?;
                let mut witness = ExactPolynomial::monomial(m.clone(), QuadraticNumber::one());
                for (i, c) in combo.iter().enumerate() {
                    if !c.is_zero() {
                        witness = witness.add(&basis_polys[i].scale(&c.neg()));
                    }
                }
                let top_form = witness.top_degree()?;
                debug_assert_eq!(top_form.leading_monomial(), Some(&m));
                leads.push(m.clone());
                generators.push(TopFormGenerator {
                    lead: m,
                    top_form,
                    witness,
                });
            }
        }
        if candidates == 0 {
            break;
        }
        d += 1;
        if d > t + 1 {
            return Err(Error::Internal(
                "staircase failed to close by the point-count degree".into(),
            ));
        }
    }
    if staircase.len() != t {
        return Err(Error::Internal(format!(
            "staircase has {} monomials for {} points",
            staircase.len(),
            t
        )));
    }
    let hilbert = hilbert_of_staircase(&staircase);
    Ok(TIdealResult {
        nvars: n,
        staircase,
        hilbert,
        generators,
    })
}

/// The literal one-vector loop: start from all monomials of degree `|X|`,
/// add one null-vector top form per iteration, recompute the staircase,
/// stop at `|st(P)| = |X|`. Slower than the sweep but useful as a
/// differential check.
pub fn compute_t_ideal_one_per_step(points: &[Point]) -> Result<TIdealResult> {
    let n = validate_points(points)?;
    let t = points.len();
    // the initial generating set: every monomial of degree |X|
    let bound = t;
    let mut leads: Vec<Vec<usize>> = monomials_of_degree(n, bound);
    let mut generators: Vec<TopFormGenerator> = Vec::new();
    let mut guard = 0usize;
    loop {
        let staircase = staircase_of_leads(&leads, n)?;
        if staircase.len() == t {
            let hilbert = hilbert_of_staircase(&staircase);
            return Ok(TIdealResult {
                nvars: n,
                staircase,
                hilbert,
                generators,
            });
        }
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Internal(
                "one-per-step loop failed to converge".into(),
            ));
        }
        // scan the staircase in graded order for the first dependent column
        let mut reducer = EvalReducer::new(t, t);
        let mut basis_polys: Vec<ExactPolynomial> = Vec::new();
        let mut found = None;
        for m in &staircase {
            let row: Vec<QuadraticNumber> = points
                .iter()
                .map(|p| eval_monomial(m, p))
                .collect::<Result<_>>()?;
            let mut aug = vec![QuadraticNumber::zero(); t];
            if basis_polys.len() < t {
                aug[basis_polys.len()] = QuadraticNumber::one();
            }
            if reducer.insert(&row, aug).is_some() {
                basis_polys.push(ExactPolynomial::monomial(m.clone(), QuadraticNumber::one()));
            } else {
                let combo = reducer
                    .express(&row)
                    .ok_or_else(|| Error::Internal("dependent row failed to express".into()))?;
                let mut witness = ExactPolynomial::monomial(m.clone(), QuadraticNumber::one());
                for (i, c) in combo.iter().enumerate() {
                    if !c.is_zero() {
                        witness = witness.add(&basis_polys[i].scale(&c.neg()));
                    }
                }
                found = Some((m.clone(), witness));
                break;
            }
        }
        let (lead, witness) = found.ok_or_else(|| {
            Error::Internal("no null vector although the staircase is oversized".into())
        })?;
        let top_form = witness.top_degree()?;
        leads.push(lead.clone());
        generators.push(TopFormGenerator {
            lead,
            top_form,
            witness,
        });
    }
}

fn staircase_of_leads(leads: &[Vec<usize>], n: usize) -> Result<Vec<Vec<usize>>> {
    // finite iff every variable has a pure power among the leads
    for i in 0..n {
        let has_power = leads
            .iter()
            .any(|l| l[i] > 0 && l.iter().enumerate().all(|(j, &a)| j == i || a == 0));
        if !has_power {
            return Err(Error::invalid(format!(
                "staircase is infinite: no pure power of x{} among the leads",
                i + 1
            )));
        }
    }
    let mut out = Vec::new();
    let mut d = 0usize;
    loop {
        let mut any = false;
        for m in monomials_of_degree(n, d) {
            if !leads.iter().any(|l| divisible(&m, l)) {
                out.push(m);
                any = true;
            }
        }
        if !any {
            return Ok(out);
        }
        d += 1;
    }
}

/// Standard monomials (the complement of the leading-monomial multiples) of
/// a generating set that contains every monomial of some degree.
pub fn staircase(generators: &[ExactPolynomial]) -> Result<Vec<Vec<usize>>> {
    if generators.is_empty() {
        return Err(Error::invalid("empty generating set"));
    }
    let n = generators[0].nvars();
    let leads: Vec<Vec<usize>> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    staircase_of_leads(&leads, n)
}

fn hilbert_of_staircase(staircase: &[Vec<usize>]) -> QPolynomial {
    let mut coeffs: Vec<i64> = Vec::new();
    for m in staircase {
        let d: usize = m.iter().sum();
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += 1;
    }
    QPolynomial::from_coeffs(coeffs)
}

/// Independent route to the same Hilbert series: the degree-d coefficient
/// is the rank jump of the evaluation matrix of all monomials of degree at
/// most d. Used as an oracle against the staircase computation.
pub fn hilbert_by_evaluation_ranks(points: &[Point]) -> Result<QPolynomial> {
    let n = validate_points(points)?;
    let t = points.len();
    let mut reducer = EvalReducer::new(t, 0);
    let mut coeffs = Vec::new();
    let mut d = 0usize;
    while reducer.rank() < t {
        let before = reducer.rank();
        for m in monomials_of_degree(n, d) {
            let row: Vec<QuadraticNumber> = points
                .iter()
                .map(|p| eval_monomial(&m, p))
                .collect::<Result<_>>()?;
            reducer.insert(&row, Vec::new());
        }
        coeffs.push((reducer.rank() - before) as i64);
        d += 1;
        if d > t + 1 {
            return Err(Error::Internal(
                "evaluation ranks failed to saturate".into(),
            ));
        }
    }
    Ok(QPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn q(a: i64) -> QuadraticNumber {
        QuadraticNumber::from_integer(a)
    }

    fn rational_point(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| q(c)).collect()).unwrap()
    }

    fn root_point(parts: &[(i64, i64, u64)]) -> Point {
        // (a, b_num/b_den implicit 1, d) triples a + b sqrt(d)
        Point::new(
            parts
                .iter()
                .map(|&(a, b, d)| {
                    QuadraticNumber::new(
                        BigRational::from_integer(a.into()),
                        BigRational::from_integer(b.into()),
                        d,
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn dn_sizes_and_signs() {
        assert_eq!(dn_elements(2).unwrap().len(), 4);
        assert_eq!(dn_elements(3).unwrap().len(), 24);
        for w in dn_elements(3).unwrap() {
            assert_eq!(w.sign_product(), 1);
        }
        assert!(dn_elements(6).is_err());
    }

    #[test]
    fn orbit_sizes() {
        let d3 = dn_elements(3).unwrap();
        let o1 = orbit(&d3, &rational_point(&[1, 1, 2])).unwrap();
        assert_eq!(o1.len(), 12);
        let o2 = orbit(&d3, &rational_point(&[-1, 1, 2])).unwrap();
        assert_eq!(o2.len(), 12);
        let o3 = orbit(&d3, &rational_point(&[1, 2, 2])).unwrap();
        assert_eq!(o3.len(), 12);
        let union: BTreeSet<Point> = o1.union(&o2).cloned().chain(o3).collect();
        assert_eq!(union.len(), 36);
        // radical seed
        let o = orbit(&d3, &root_point(&[(0, 0, 0), (0, 1, 3), (0, 1, 3)])).unwrap();
        assert_eq!(o.len(), 12);
    }

    #[test]
    fn indicator_examples() {
        // single point: the constant 1
        let x = rational_point(&[2, 3]);
        let ind = indicator(&[x.clone()], &x).unwrap();
        assert_eq!(ind.eval(&x).unwrap(), QuadraticNumber::one());
        assert_eq!(ind.num_terms(), 1);
        // two points on a line: Lagrange interpolation
        let zero = rational_point(&[0]);
        let one = rational_point(&[1]);
        let pts = vec![zero.clone(), one.clone()];
        let ind1 = indicator(&pts, &one).unwrap();
        assert_eq!(ind1.eval(&one).unwrap(), QuadraticNumber::one());
        assert!(ind1.eval(&zero).unwrap().is_zero());
        let ind0 = indicator(&pts, &zero).unwrap();
        assert_eq!(ind0.eval(&zero).unwrap(), QuadraticNumber::one());
        assert!(ind0.eval(&one).unwrap().is_zero());
    }

    #[test]
    fn indicator_random_rational_points() {
        let pts: Vec<Point> = vec![
            rational_point(&[0, 1, 2]),
            rational_point(&[1, 1, 2]),
            rational_point(&[3, -1, 0]),
            rational_point(&[2, 2, 2]),
            rational_point(&[-1, 0, 5]),
            rational_point(&[4, 4, 4]),
            rational_point(&[0, 0, 0]),
            rational_point(&[1, 2, 3]),
        ];
        let mut total = ExactPolynomial::zero(3);
        for x in &pts {
            let ind = indicator(&pts, x).unwrap();
            for y in &pts {
                let v = ind.eval(y).unwrap();
                if x == y {
                    assert_eq!(v, QuadraticNumber::one());
                } else {
                    assert!(v.is_zero(), "indicator of {x} at {y}");
                }
            }
            total = total.add(&ind);
        }
        // the indicators sum to the constant-1 function on X
        for y in &pts {
            assert_eq!(total.eval(y).unwrap(), QuadraticNumber::one());
        }
    }

    #[test]
    fn top_degree_examples() {
        // x1^2+x2^2+x2x3-x1-x2-x3+3
        let mut f = ExactPolynomial::zero(3);
        f.add_term(vec![2, 0, 0], q(1));
        f.add_term(vec![0, 2, 0], q(1));
        f.add_term(vec![0, 1, 1], q(1));
        f.add_term(vec![1, 0, 0], q(-1));
        f.add_term(vec![0, 1, 0], q(-1));
        f.add_term(vec![0, 0, 1], q(-1));
        f.add_term(vec![0, 0, 0], q(3));
        let top = f.top_degree().unwrap();
        let mut want = ExactPolynomial::zero(3);
        want.add_term(vec![2, 0, 0], q(1));
        want.add_term(vec![0, 2, 0], q(1));
        want.add_term(vec![0, 1, 1], q(1));
        assert_eq!(top, want);
        // x1^4+x1x2x3x4+x3^4-x2^3-x2^2+3
        let mut f = ExactPolynomial::zero(4);
        f.add_term(vec![4, 0, 0, 0], q(1));
        f.add_term(vec![1, 1, 1, 1], q(1));
        f.add_term(vec![0, 0, 4, 0], q(1));
        f.add_term(vec![0, 3, 0, 0], q(-1));
        f.add_term(vec![0, 2, 0, 0], q(-1));
        f.add_term(vec![0, 0, 0, 0], q(3));
        let top = f.top_degree().unwrap();
        let mut want = ExactPolynomial::zero(4);
        want.add_term(vec![4, 0, 0, 0], q(1));
        want.add_term(vec![1, 1, 1, 1], q(1));
        want.add_term(vec![0, 0, 4, 0], q(1));
        assert_eq!(top, want);
        // homogeneous input is its own top form; zero errors
        assert_eq!(top.top_degree().unwrap(), top);
        assert!(ExactPolynomial::zero(2).top_degree().is_err());
    }

    #[test]
    fn staircase_examples() {
        // {x1, x2}: just the constant
        let gens = vec![
            ExactPolynomial::monomial(vec![1, 0], q(1)),
            ExactPolynomial::monomial(vec![0, 1], q(1)),
        ];
        assert_eq!(staircase(&gens).unwrap(), vec![vec![0, 0]]);
        // all monomials of degree 2 in two variables
        let gens: Vec<ExactPolynomial> = monomials_of_degree(2, 2)
            .into_iter()
            .map(|e| ExactPolynomial::monomial(e, q(1)))
            .collect();
        let st = staircase(&gens).unwrap();
        assert_eq!(st.len(), 3);
        // {x1^2} plus degree-3 monomials
        let mut gens: Vec<ExactPolynomial> = monomials_of_degree(2, 3)
            .into_iter()
            .map(|e| ExactPolynomial::monomial(e, q(1)))
            .collect();
        gens.push(ExactPolynomial::monomial(vec![2, 0], q(1)));
        let st = staircase(&gens).unwrap();
        let want: BTreeSet<Vec<usize>> =
            [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 2]]
                .into_iter()
                .collect();
        assert_eq!(st.into_iter().collect::<BTreeSet<_>>(), want);
        // infinite staircase is rejected
        let gens = vec![ExactPolynomial::monomial(vec![1, 0], q(1))];
        assert!(staircase(&gens).is_err());
    }

    #[test]
    fn t_ideal_origin() {
        let origin = rational_point(&[0, 0, 0]);
        let result = compute_t_ideal(&[origin]).unwrap();
        assert_eq!(result.staircase, vec![vec![0, 0, 0]]);
        assert_eq!(result.hilbert.coeffs(), &[1]);
        // the three variables appear among the leads
        for i in 0..3 {
            let mut unit = vec![0; 3];
            unit[i] = 1;
            assert!(result.generators.iter().any(|g| g.lead == unit));
        }
    }

    #[test]
    fn t_ideal_generators_are_top_forms_of_vanishing_witnesses() {
        let d3 = dn_elements(3).unwrap();
        let mut pts: BTreeSet<Point> = BTreeSet::new();
        pts.extend(orbit(&d3, &rational_point(&[1, 1, 2])).unwrap());
        pts.extend(orbit(&d3, &rational_point(&[-1, 1, 2])).unwrap());
        let points: Vec<Point> = pts.into_iter().collect();
        let result = compute_t_ideal(&points).unwrap();
        assert_eq!(result.staircase.len(), points.len());
        for g in &result.generators {
            for p in &points {
                assert!(g.witness.eval(p).unwrap().is_zero());
            }
            assert_eq!(g.witness.top_degree().unwrap(), g.top_form);
            assert_eq!(g.top_form.leading_monomial(), Some(&g.lead));
        }
        // rank-jump oracle agrees
        assert_eq!(
            result.hilbert,
            hilbert_by_evaluation_ranks(&points).unwrap()
        );
    }

    #[test]
    fn t_ideal_first_d3_example() {
        let d3 = dn_elements(3).unwrap();
        let mut pts: BTreeSet<Point> = BTreeSet::new();
        pts.extend(orbit(&d3, &rational_point(&[1, 1, 2])).unwrap());
        pts.extend(orbit(&d3, &rational_point(&[-1, 1, 2])).unwrap());
        pts.extend(orbit(&d3, &rational_point(&[1, 2, 2])).unwrap());
        let points: Vec<Point> = pts.into_iter().collect();
        assert_eq!(points.len(), 36);
        let result = compute_t_ideal(&points).unwrap();
        assert_eq!(result.hilbert.coeffs(), &[1, 3, 6, 10, 11, 5]);
        assert_eq!(result.hilbert.eval_one(), 36);
        assert_eq!(
            result.hilbert,
            hilbert_by_evaluation_ranks(&points).unwrap()
        );
    }

    #[test]
    fn t_ideal_order_invariance_and_equivariance() {
        let d3 = dn_elements(3).unwrap();
        let mut pts: BTreeSet<Point> = BTreeSet::new();
        pts.extend(orbit(&d3, &rational_point(&[1, 1, 2])).unwrap());
        pts.extend(orbit(&d3, &rational_point(&[1, 2, 2])).unwrap());
        let points: Vec<Point> = pts.into_iter().collect();
        let base = compute_t_ideal(&points).unwrap();
        // permuted input order
        let mut shuffled = points.clone();
        shuffled.reverse();
        shuffled.swap(0, 7);
        shuffled.swap(3, 11);
        let permuted = compute_t_ideal(&shuffled).unwrap();
        assert_eq!(base.staircase, permuted.staircase);
        assert_eq!(base.hilbert, permuted.hilbert);
        // replacing X by w(X) for w in the group
        for w in d3.iter().take(5) {
            let moved: Vec<Point> = points.iter().map(|p| w.apply(p).unwrap()).collect();
            let image = compute_t_ideal(&moved).unwrap();
            assert_eq!(base.staircase, image.staircase);
        }
    }

    #[test]
    fn one_per_step_matches_sweep_small() {
        // small rational set keeps the literal loop quick in unit tests
        let d3 = dn_elements(3).unwrap();
        let points: Vec<Point> = orbit(&d3, &rational_point(&[1, 1, 2]))
            .unwrap()
            .into_iter()
            .collect();
        let sweep = compute_t_ideal(&points).unwrap();
        let literal = compute_t_ideal_one_per_step(&points).unwrap();
        assert_eq!(sweep.staircase, literal.staircase);
        assert_eq!(sweep.hilbert, literal.hilbert);
        // the quotient dimension equals the orbit size
        assert_eq!(sweep.hilbert.eval_one() as usize, points.len());
    }

    #[test]
    fn mixed_radicals_rejected() {
        let a = Point::new(vec![
            QuadraticNumber::new(BigRational::zero(), BigRational::one(), 3),
            q(1),
        ])
        .unwrap();
        let b = Point::new(vec![
            QuadraticNumber::new(BigRational::zero(), BigRational::one(), 5),
            q(1),
        ])
        .unwrap();
        assert!(compute_t_ideal(&[a, b]).is_err());
    }
}
