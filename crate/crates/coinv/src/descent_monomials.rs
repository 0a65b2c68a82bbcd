//! Descent monomials and the straightening algorithm.
//!
//! The classical case is `r = 1`: Garsia-Stanton monomials `gs_sigma`, their
//! `(n,k)` extensions `gs_{pi,I}`, the partial order on monomials, and the
//! straightening expansion of any bounded-exponent monomial over the basis
//! `{gs_{pi,I} e_nu}`. Everything is implemented once with the color
//! parameter `r`; `r = 1` recovers the plain-permutation theory and `r > 1`
//! the wreath analogue with `b_g`, `b_{g,I}` and `e_nu(x^r)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{
    dominance_compare, ColoredPermutation, Dominance, Partition, Permutation,
};
use crate::error::{Error, Result};
use crate::symfunc::{elementary_product, MultiPolynomial};

/// A monomial in `n` variables as a dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<usize>,
}

impl Monomial {
    pub fn new(exponents: Vec<usize>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// 1-based exponent of `x_i`.
    pub fn exponent(&self, i: usize) -> usize {
        self.exponents[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// Parse the `x1^a1*x2^a2` form (zero exponents omitted, `1` allowed for
    /// the constant monomial) into an `nvars`-variable monomial.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let mut exponents = vec![0usize; nvars];
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Monomial { exponents });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::invalid(format!("bad factor `{factor}`")))?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let var: usize = var
                .parse()
                .map_err(|_| Error::invalid(format!("bad variable in `{factor}`")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::invalid(format!("bad exponent in `{factor}`")))?;
            if var == 0 || var > nvars {
                return Err(Error::invalid(format!(
                    "variable x{var} outside 1..{nvars}"
                )));
            }
            exponents[var - 1] += exp;
        }
        Ok(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The index r-colored permutation of a monomial: variables sorted by
/// exponent (descending), ties to the smaller index, colored by exponent
/// mod `r`.
pub fn index_colored_permutation(m: &Monomial, r: usize) -> ColoredPermutation {
    let n = m.nvars();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| m.exponent(b).cmp(&m.exponent(a)).then(a.cmp(&b)));
    let colors = order.iter().map(|&v| m.exponent(v) % r).collect();
    let word = Permutation::new(order).expect("sorted indices form a permutation");
    ColoredPermutation::new(word, colors, r).expect("colors already reduced")
}

/// The plain index permutation (`r = 1`).
pub fn index_permutation(m: &Monomial) -> Permutation {
    index_colored_permutation(m, 1).permutation()
}

/// Sorted exponent vector of `m` as a partition (length-n context implied).
pub fn exponent_partition(m: &Monomial) -> Partition {
    Partition::from_multiset(m.exponents.clone())
}

/// The residual weights `(a_{pi_i} - f_i(g)) / r`, a weakly decreasing
/// non-negative integer vector; its conjugate is the complementary partition.
fn complementary_preconjugate(m: &Monomial, r: usize) -> Vec<usize> {
    let g = index_colored_permutation(m, r);
    let stats = g.descents();
    let n = m.nvars();
    let mut v = Vec::with_capacity(n);
    for i in 1..=n {
        let a = m.exponent(g.word()[i - 1]);
        let f = stats.f[i - 1];
        assert!(
            a >= f && (a - f) % r == 0,
            "flag statistics exceed exponents"
        );
        v.push((a - f) / r);
    }
    assert!(
        v.windows(2).all(|w| w[0] >= w[1]),
        "residual weights must decrease"
    );
    v
}

/// The complementary partition of a monomial: conjugate of the residual
/// weight vector. For a descent monomial this is empty.
pub fn complementary_partition(m: &Monomial, r: usize) -> Partition {
    Partition::new_unchecked(complementary_preconjugate(m, r)).conjugate()
}

/// The Garsia-Stanton monomial of a permutation: `x_{sigma(i)}^{d_i}`.
pub fn gs_monomial(sigma: &Permutation) -> Monomial {
    let g = ColoredPermutation::new(sigma.clone(), vec![0; sigma.n()], 1).expect("length matches");
    descent_monomial_unchecked(&g, &[])
}

/// `b_g x_{pi_1}^{r i_1} ... x_{pi_{len(I)}}^{r i_len}` with no validity
/// checks on `I`; exponent of `x_{pi_i}` is `f_i(g) + r*i_i`.
pub fn descent_monomial_unchecked(g: &ColoredPermutation, i_seq: &[usize]) -> Monomial {
    let n = g.n();
    let r = g.r();
    let stats = g.descents();
    let mut exponents = vec![0usize; n];
    for i in 1..=n {
        let extra = if i <= i_seq.len() { i_seq[i - 1] } else { 0 };
        exponents[g.word()[i - 1] - 1] = stats.f[i - 1] + r * extra;
    }
    Monomial { exponents }
}

/// A basis element `b_{g,I} e_nu(x^r)`: the quotient-basis case is `nu`
/// empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentBasisElement {
    g: ColoredPermutation,
    i_seq: Vec<usize>,
    nu: Partition,
}

impl DescentBasisElement {
    /// Validate the defining chain `k - des(g) > i_1 >= ... >= i_{n-k} >= 0`,
    /// the e-factor part bound, and the basis membership bound
    /// `(lambda(b_{g,I}) + r*nu')_1 < rk` when `nu` is present.
    pub fn new(g: ColoredPermutation, i_seq: Vec<usize>, nu: Partition, k: usize) -> Result<Self> {
        let n = g.n();
        let r = g.r();
        if k == 0 || k > n {
            return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
        }
        if i_seq.len() != n - k {
            return Err(Error::SizeMismatch {
                left: i_seq.len(),
                right: n - k,
            });
        }
        let des = g.des();
        if des >= k {
            return Err(Error::invalid(format!(
                "des(g) = {des} must be below k = {k}"
            )));
        }
        if let Some(&first) = i_seq.first() {
            if first + des >= k {
                return Err(Error::invalid(format!(
                    "i_1 = {first} violates i_1 < k - des(g) = {}",
                    k - des
                )));
            }
        }
        if i_seq.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("I must be weakly decreasing"));
        }
        if !nu.is_empty() {
            if nu.part(nu.len()) < n - k + 1 {
                return Err(Error::invalid(format!(
                    "e-factor parts must be at least n-k+1 = {}",
                    n - k + 1
                )));
            }
            if nu.part(1) > n {
                return Err(Error::invalid("e-factor parts cannot exceed n"));
            }
            let lead = descent_monomial_unchecked(&g, &i_seq);
            let top =
                lead.exponents().iter().copied().max().unwrap_or(0) + r * nu.conjugate().part(1);
            if top >= r * k {
                return Err(Error::invalid(format!(
                    "leading exponent {top} escapes the truncated ring (< {})",
                    r * k
                )));
            }
        }
        Ok(DescentBasisElement { g, i_seq, nu })
    }

    pub fn colored_permutation(&self) -> &ColoredPermutation {
        &self.g
    }

    pub fn i_seq(&self) -> &[usize] {
        &self.i_seq
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn has_e_factor(&self) -> bool {
        !self.nu.is_empty()
    }

    /// The monomial `b_{g,I}` (the e-factor is not multiplied in).
    pub fn monomial(&self) -> Monomial {
        descent_monomial_unchecked(&self.g, &self.i_seq)
    }

    /// The fully multiplied-out polynomial `b_{g,I} e_nu(x^r)`.
    pub fn expand(&self) -> MultiPolynomial {
        let n = self.g.n();
        let r = self.g.r();
        let lead =
            MultiPolynomial::monomial(self.monomial().exponents().to_vec(), BigRational::one());
        lead.mul(&elementary_product(&self.nu, n, r))
    }
}

impl fmt::Display for DescentBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g = {}, I = {:?}", self.g, self.i_seq)?;
        if !self.nu.is_empty() {
            write!(f, ", nu = {}", self.nu)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DescentBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The partial order on equal-degree monomials: strictly dominance-smaller
/// exponent partition, or equal partitions with strictly more inversions.
pub fn prec_compare(m1: &Monomial, m2: &Monomial) -> Result<Dominance> {
    if m1.degree() != m2.degree() {
        return Err(Error::SizeMismatch {
            left: m1.degree(),
            right: m2.degree(),
        });
    }
    if m1 == m2 {
        return Ok(Dominance::Equal);
    }
    let l1 = exponent_partition(m1);
    let l2 = exponent_partition(m2);
    match dominance_compare(&l1, &l2)? {
        Dominance::Less => Ok(Dominance::Less),
        Dominance::Greater => Ok(Dominance::Greater),
        Dominance::Incomparable => Ok(Dominance::Incomparable),
        Dominance::Equal => {
            let i1 = index_permutation(m1).inversions();
            let i2 = index_permutation(m2).inversions();
            match i1.cmp(&i2) {
                std::cmp::Ordering::Greater => Ok(Dominance::Less),
                std::cmp::Ordering::Less => Ok(Dominance::Greater),
                std::cmp::Ordering::Equal => Ok(Dominance::Incomparable),
            }
        }
    }
}

/// Among the monomials of `m * e_mu(x^r)`, the maximum under the partial
/// order: exponent `p_{pi(i)} + r*mu'_i` on variable `pi(i)`.
pub fn leading_product_monomial(m: &Monomial, mu: &Partition, r: usize) -> Monomial {
    let pi = index_colored_permutation(m, r);
    let conj = mu.conjugate();
    let mut exponents = m.exponents.clone();
    for i in 1..=m.nvars() {
        let var = pi.word()[i - 1];
        exponents[var - 1] += r * conj.part(i);
    }
    Monomial { exponents }
}

/// One straightening step: `m = b_{g,I} e_nu(x^r) + (strictly smaller)`,
/// where `I_l = mu'_l - mu'_{n-k+1}` and `nu'` flattens `mu'` below
/// `n-k+1`. Requires every exponent below `rk`.
pub fn straighten_step(m: &Monomial, k: usize, r: usize) -> Result<DescentBasisElement> {
    let n = m.nvars();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    if m.exponents.iter().any(|&a| a >= r * k) {
        return Err(Error::invalid(format!(
            "monomial {m} has an exponent at or above rk = {}",
            r * k
        )));
    }
    let g = index_colored_permutation(m, r);
    let v = complementary_preconjugate(m, r);
    let pivot = v[n - k]; // v_{n-k+1}, 1-based
    let i_seq: Vec<usize> = (0..n - k).map(|l| v[l] - pivot).collect();
    let mut nu_conj = v.clone();
    for entry in nu_conj.iter_mut().take(n - k) {
        *entry = pivot;
    }
    let nu = Partition::new_unchecked(nu_conj).conjugate();
    DescentBasisElement::new(g, i_seq, nu, k)
        .map_err(|e| Error::Internal(format!("straightening produced invalid element: {e}")))
}

/// Processing key for the straightening worklist (and the oracle's column
/// order): tuple whose `Ord` maximum is always a maximal monomial under the
/// partial order.
pub(crate) fn order_key(m: &Monomial) -> (Vec<usize>, i64, Vec<usize>) {
    let lambda = exponent_partition(m);
    let inv = index_permutation(m).inversions() as i64;
    (lambda.parts().to_vec(), -inv, m.exponents.clone())
}

/// Full straightening: the exact expansion of `m` over the basis
/// `{b_{g,I} e_nu(x^r)}`. Re-multiplying every term reproduces `m`.
pub fn straighten_full(
    m: &Monomial,
    k: usize,
    r: usize,
) -> Result<BTreeMap<DescentBasisElement, BigRational>> {
    let mut result: BTreeMap<DescentBasisElement, BigRational> = BTreeMap::new();
    let mut worklist: BTreeMap<(Vec<usize>, i64, Vec<usize>), (Monomial, BigRational)> =
        BTreeMap::new();
    worklist.insert(order_key(m), (m.clone(), BigRational::one()));
    while let Some((key, (mono, coeff))) = worklist.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let element = straighten_step(&mono, k, r)?;
        let expansion = element.expand();
        // the processed monomial must be the expansion's leading term, coeff 1
        let self_coeff = expansion.coeff(mono.exponents());
        if self_coeff != BigRational::one() {
            return Err(Error::Internal(format!(
                "leading coefficient of {element} at {mono} is {self_coeff}, expected 1"
            )));
        }
        for (e, c) in expansion.terms() {
            let term = Monomial::new(e.clone());
            let tkey = order_key(&term);
            if tkey == key {
                continue; // the leading term cancels against `mono` exactly
            }
            debug_assert!(tkey < key, "straightening produced a non-smaller term");
            let entry = worklist
                .entry(tkey)
                .or_insert_with(|| (term, BigRational::zero()));
            entry.1 -= &coeff * c;
        }
        *result.entry(element).or_insert_with(BigRational::zero) += coeff;
    }
    result.retain(|_, c| !c.is_zero());
    Ok(result)
}

/// The image of `m` in the quotient: straighten and drop every term with an
/// e-factor.
pub fn project_to_quotient(
    m: &Monomial,
    k: usize,
    r: usize,
) -> Result<BTreeMap<DescentBasisElement, BigRational>> {
    let mut full = straighten_full(m, k, r)?;
    full.retain(|e, _| !e.has_e_factor());
    Ok(full)
}

/// All quotient-basis elements `(g, I)` for the given `(n, k, r)`.
pub fn enumerate_basis(n: usize, k: usize, r: usize) -> Result<Vec<DescentBasisElement>> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let mut out = Vec::new();
    for g in crate::combinatorics::all_colored_permutations(n, r) {
        let des = g.des();
        if des >= k {
            continue;
        }
        let cap = k - des - 1; // i_1 <= k - des(g) - 1
        for i_seq in weakly_decreasing_sequences(n - k, cap) {
            out.push(DescentBasisElement {
                g: g.clone(),
                i_seq,
                nu: Partition::empty(),
            });
        }
    }
    Ok(out)
}

/// All weakly decreasing sequences of the given length with entries in
/// `0..=cap`, in descending lexicographic order.
fn weakly_decreasing_sequences(len: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(len: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for v in (0..=cap).rev() {
            current.push(v);
            rec(len, v, current, out);
            current.pop();
        }
    }
    rec(len, cap, &mut current, &mut out);
    out
}

/// Subtract an r-descent partition: the unique `rho` with
/// `mu = nu + r*rho`, when the congruence and descent-subset conditions
/// hold.
pub fn decompose_nu(mu: &Partition, nu: &Partition, r: usize) -> Result<Option<Partition>> {
    // trailing zeros are implicit, so validity is judged with one zero part
    // appended; the decomposability conditions themselves are insensitive to
    // how far the common zero-padding extends
    if !nu.is_r_descent_partition(r, nu.len() + 1) {
        return Err(Error::invalid(format!(
            "{nu} is not an r-descent partition for r = {r}"
        )));
    }
    let len = mu.len().max(nu.len());
    for i in 1..=len {
        if mu.part(i) % r != nu.part(i) % r {
            return Ok(None);
        }
    }
    let des_nu = nu.r_descents(r, len)?;
    let des_mu = mu.r_descents(r, len)?;
    if !des_nu.is_subset(&des_mu) {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(len);
    for i in 1..=len {
        if mu.part(i) < nu.part(i) {
            return Ok(None);
        }
        parts.push((mu.part(i) - nu.part(i)) / r);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!(
            "descent-subset condition held but {mu} - r*{nu} is not a partition"
        )));
    }
    Ok(Some(Partition::new_unchecked(parts)))
}

/// Split `mu = nu + r*rho` where `nu` is the exponent partition of a
/// descent monomial whose tail r-descents are exactly `subset`, and `rho`
/// is constant on its first `n-k+1` parts.
pub fn decompose_by_descent_subset(
    mu: &Partition,
    subset: &std::collections::BTreeSet<usize>,
    n: usize,
    k: usize,
    r: usize,
) -> Result<(Partition, Partition)> {
    if !mu.classify(n, k, r)?.is_nk_partition {
        return Err(Error::invalid(format!(
            "{mu} is not an (n,k,r)-partition for n={n} k={k} r={r}"
        )));
    }
    let allowed = mu.descents_in_range(r, n - k + 1, n)?;
    if !subset.is_subset(&allowed) {
        return Err(Error::invalid(format!(
            "{subset:?} is not inside the tail r-descents {allowed:?} of {mu}"
        )));
    }
    if subset.contains(&n) {
        return Err(Error::invalid(
            "a tail descent at position n cannot appear in a descent-monomial exponent partition",
        ));
    }
    let padded = mu.padded(n);
    // tail positions n-k+1..n map to 1..k
    let tail: Vec<usize> = padded[n - k..].to_vec();
    let tail_set: Vec<usize> = subset.iter().map(|&s| s - (n - k)).collect();
    let mut nu_tail = Vec::with_capacity(k);
    for j in 1..=k {
        let drops = tail_set.iter().filter(|&&s| s >= j).count();
        nu_tail.push(r * drops + tail[j - 1] % r);
    }
    if nu_tail.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!(
            "no descent-monomial tail matches residues of {mu} with descent set {subset:?}"
        )));
    }
    let rho_head = (tail[0] - nu_tail[0]) / r;
    let mut rho = vec![rho_head; n - k];
    for j in 0..k {
        rho.push((tail[j] - nu_tail[j]) / r);
    }
    if rho.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal("complement is not a partition".into()));
    }
    let nu: Vec<usize> = padded.iter().zip(&rho).map(|(&m, &c)| m - r * c).collect();
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal("descent part is not a partition".into()));
    }
    let nu = Partition::new_unchecked(nu);
    let rho = Partition::new_unchecked(rho);
    debug_assert!(nu
        .classify(n, k, r)
        .map(|c| c.is_exponent_of_descent_monomial)
        .unwrap_or(false));
    Ok((nu, rho))
}
