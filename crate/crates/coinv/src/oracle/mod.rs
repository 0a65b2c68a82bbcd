//! Independent ground truth: the quotient rings are built explicitly,
//! degree by degree, by exact row reduction over the rationals, and their
//! refined components are decomposed into irreducibles with exact
//! (cyclotomic) character arithmetic.
//!
//! Nothing here shares a code path with the closed-form formulas in
//! [`crate::representations`]; agreement between the two is the central
//! correctness check of the crate.

mod characters;
mod cyclotomic;
mod linalg;

pub use characters::{
    border_strips, class_label, class_representative, conjugacy_classes, group_order, sn_character,
    wreath_character, CharacterTable, ConjugacyClass,
};
pub use cyclotomic::CyclotomicNumber;
pub use linalg::{RowReducer, SparseRow};

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{
    dominance_compare, partitions_of, ColoredPermutation, Dominance, Partition, QPolynomial,
    RPartition,
};
use crate::descent_monomials::{exponent_partition, order_key, Monomial};
use crate::error::{Error, Result};
use crate::symfunc::elementary;

/// Apply a group element to a monomial under the matrix convention
/// `x_i -> xi^{c_i} x_{w_i}`: returns the power of `xi` picked up and the
/// image monomial.
pub fn act_on_monomial(g: &ColoredPermutation, m: &Monomial) -> (usize, Monomial) {
    let n = m.nvars();
    assert_eq!(g.n(), n);
    let mut exps = vec![0usize; n];
    let mut phase = 0usize;
    for i in 0..n {
        let a = m.exponents()[i];
        exps[g.word()[i] - 1] = a;
        phase += g.colors()[i] * a;
    }
    (phase % g.r().max(1), Monomial::new(exps))
}

/// All monomials of total degree `d` in `n` variables with every exponent
/// strictly below `bound`.
pub fn monomials_of_degree_bounded(n: usize, d: usize, bound: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0usize; n];
    fn rec(slot: usize, rem: usize, bound: usize, exps: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if slot + 1 == exps.len() {
            if rem < bound {
                exps[slot] = rem;
                out.push(Monomial::new(exps.clone()));
                exps[slot] = 0;
            }
            return;
        }
        for v in 0..bound.min(rem + 1) {
            exps[slot] = v;
            rec(slot + 1, rem - v, bound, exps, out);
        }
        exps[slot] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, bound, &mut exps, &mut out);
    out
}

/// One graded slice of the quotient: the truncated monomials of its degree
/// (ordered with the partial-order maximum first), which of them survive as
/// standard monomials, and the reduction of every monomial onto those.
pub struct Slice {
    pub degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Vec<usize>, usize>,
    /// column indices of the standard monomials, ascending
    standard: Vec<usize>,
    /// per column: reduction as (standard position, coefficient) pairs
    reduced: Vec<SparseRow>,
}

impl Slice {
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn standard_monomials(&self) -> Vec<&Monomial> {
        self.standard.iter().map(|&c| &self.monomials[c]).collect()
    }
}

/// The quotient ring built degree by degree. The ambient space is the
/// truncated polynomial ring (exponents below `rk`): every monomial with a
/// larger exponent is already a multiple of a power generator, so the
/// remaining relations are the truncations of the `e_j(x^r)` multiples.
pub struct GradedQuotient {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    slices: Vec<Slice>,
}

impl GradedQuotient {
    /// Row-reduce every degree up to `degree_cap` (or to the top of the
    /// quotient when `None`: construction stops at the first empty slice,
    /// after which all higher slices are empty too, the quotient being
    /// generated in degree one).
    pub fn build(n: usize, k: usize, r: usize, degree_cap: Option<usize>) -> Result<Self> {
        if r == 0 || k == 0 || k > n {
            return Err(Error::invalid(format!(
                "need r >= 1 and 1 <= k <= n, got n={n} k={k} r={r}"
            )));
        }
        let hard_cap = n * (r * k - 1);
        let cap = degree_cap.unwrap_or(hard_cap).min(hard_cap);
        let mut slices = Vec::new();
        for d in 0..=cap {
            let slice = build_slice(n, k, r, d)?;
            let empty = slice.dim() == 0;
            slices.push(slice);
            if empty {
                break;
            }
        }
        Ok(GradedQuotient { n, k, r, slices })
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn slice(&self, d: usize) -> Option<&Slice> {
        self.slices.get(d)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.slices.get(d).map(|s| s.dim()).unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.slices.iter().map(|s| s.dim()).sum()
    }

    /// Hilbert series as a polynomial in `q`.
    pub fn hilbert(&self) -> QPolynomial {
        QPolynomial::from_coeffs(self.slices.iter().map(|s| s.dim() as i64).collect())
    }

    /// Reduction of a monomial onto the standard monomials of its slice;
    /// empty when the monomial lies in the ideal (or beyond the top degree).
    pub fn reduce_monomial(&self, m: &Monomial) -> SparseRow {
        if m.exponents().iter().any(|&a| a >= self.r * self.k) {
            return Vec::new();
        }
        let d = m.degree();
        match self.slices.get(d) {
            None => Vec::new(),
            Some(slice) => match slice.index.get(m.exponents()) {
                None => Vec::new(),
                Some(&col) => slice.reduced[col].clone(),
            },
        }
    }

    /// The refined component for an exponent partition `rho`: the span of
    /// dominated monomials modulo strictly dominated ones, with explicit
    /// coset representatives drawn from the rearrangements of `rho`.
    pub fn refined_component(&self, rho: &Partition) -> Result<RefinedComponent> {
        let d = rho.size();
        if rho.len() > self.n || self.slices.get(d).map(|s| s.dim()).unwrap_or(0) == 0 {
            return Ok(RefinedComponent {
                rho: rho.clone(),
                degree: d,
                reps: Vec::new(),
                solver: RowReducer::new(0, 0),
            });
        }
        let slice = &self.slices[d];
        let mut strict: Vec<usize> = Vec::new();
        let mut orbit: Vec<usize> = Vec::new();
        for (col, m) in slice.monomials.iter().enumerate() {
            let lam = exponent_partition(m);
            match dominance_compare(&lam, rho)? {
                Dominance::Less => strict.push(col),
                Dominance::Equal => orbit.push(col),
                _ => {}
            }
        }
        let mut solver = RowReducer::new(slice.dim(), orbit.len());
        for &col in &strict {
            if solver.rank() == slice.dim() {
                break;
            }
            solver.insert(slice.reduced[col].clone(), Vec::new());
        }
        let mut reps = Vec::new();
        for (t, &col) in orbit.iter().enumerate() {
            let mut aug = vec![BigRational::zero(); orbit.len()];
            aug[t] = BigRational::one();
            if solver.insert(slice.reduced[col].clone(), aug).is_some() {
                reps.push((slice.monomials[col].clone(), t));
            }
        }
        Ok(RefinedComponent {
            rho: rho.clone(),
            degree: d,
            reps,
            solver,
        })
    }

    /// Graded trace of a group element on a refined component.
    pub fn group_action_trace(
        &self,
        comp: &RefinedComponent,
        g: &ColoredPermutation,
    ) -> Result<CyclotomicNumber> {
        if g.r() != self.r || g.n() != self.n {
            return Err(Error::invalid(
                "element does not match the quotient's group",
            ));
        }
        let mut trace = CyclotomicNumber::zero(self.r);
        for (rep, aug_idx) in &comp.reps {
            let (phase, image) = act_on_monomial(g, rep);
            let reduced = self.reduce_monomial(&image);
            let combo = comp
                .solver
                .express(&reduced)
                .ok_or_else(|| Error::Internal("group image escaped the dominated span".into()))?;
            // coefficient of this rep in the image, twisted by the phase
            let c = combo[*aug_idx].clone();
            if !c.is_zero() {
                trace = trace.add(&CyclotomicNumber::root_power(self.r, phase).scale(&c));
            }
        }
        Ok(trace)
    }

    /// Character decomposition of a refined component: multiplicities of
    /// every irreducible, all exactly integral and non-negative.
    pub fn decompose(
        &self,
        comp: &RefinedComponent,
        table: &CharacterTable,
    ) -> Result<BTreeMap<RPartition, usize>> {
        if table.n != self.n || table.r != self.r {
            return Err(Error::invalid(
                "character table does not match the quotient",
            ));
        }
        let mut out = BTreeMap::new();
        if comp.dim() == 0 {
            return Ok(out);
        }
        let traces: Vec<CyclotomicNumber> = table
            .classes
            .iter()
            .map(|class| self.group_action_trace(comp, &class.representative))
            .collect::<Result<_>>()?;
        let order = BigRational::from_integer(group_order(self.n, self.r).into());
        for (i, shape) in table.irreps.iter().enumerate() {
            let mut acc = CyclotomicNumber::zero(self.r);
            for (j, class) in table.classes.iter().enumerate() {
                let w = BigRational::from_integer(class.size.into());
                acc = acc.add(&traces[j].mul(&table.values[i][j].conj()).scale(&w));
            }
            let value = acc
                .as_rational()
                .ok_or_else(|| Error::Internal(format!("irrational multiplicity at {shape}")))?;
            let scaled = value / &order;
            if !scaled.is_integer() || scaled < BigRational::zero() {
                return Err(Error::Internal(format!(
                    "multiplicity {scaled} at {shape} is not a non-negative integer"
                )));
            }
            let mult = usize::try_from(scaled.to_integer())
                .map_err(|_| Error::Internal("multiplicity overflow".into()))?;
            if mult > 0 {
                out.insert(shape.clone(), mult);
            }
        }
        Ok(out)
    }
}

fn build_slice(n: usize, k: usize, r: usize, d: usize) -> Result<Slice> {
    let bound = r * k;
    let mut monomials = monomials_of_degree_bounded(n, d, bound);
    let mut keyed: Vec<((Vec<usize>, i64, Vec<usize>), Monomial)> =
        monomials.drain(..).map(|m| (order_key(&m), m)).collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    let monomials: Vec<Monomial> = keyed.into_iter().map(|(_, m)| m).collect();
    let index: HashMap<Vec<usize>, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.exponents().to_vec(), i))
        .collect();
    let mut reducer = RowReducer::new(monomials.len(), 0);
    // degree-d span of the ideal: truncations of m * e_j(x^r) for the
    // surviving elementary generators (power generators vanish entirely
    // under truncation)
    for j in (n + 1).saturating_sub(k)..=n {
        if j == 0 || r * j > d {
            continue;
        }
        let gen = elementary(j, n, r);
        for mult in monomials_of_degree_bounded(n, d - r * j, bound) {
            let mut row: SparseRow = Vec::new();
            for (e, c) in gen.terms() {
                let prod: Vec<usize> = e.iter().zip(mult.exponents()).map(|(a, b)| a + b).collect();
                if prod.iter().any(|&a| a >= bound) {
                    continue;
                }
                let col = index[&prod];
                row.push((col, c.clone()));
            }
            if !row.is_empty() {
                row.sort_by_key(|(c, _)| *c);
                reducer.insert(row, Vec::new());
            }
        }
    }
    let standard = reducer.standard_columns();
    let std_pos: HashMap<usize, usize> = standard
        .iter()
        .enumerate()
        .map(|(pos, &col)| (col, pos))
        .collect();
    let mut reduced = Vec::with_capacity(monomials.len());
    for col in 0..monomials.len() {
        let res = reducer.reduce(&vec![(col, BigRational::one())]);
        let remapped: SparseRow = res.into_iter().map(|(c, v)| (std_pos[&c], v)).collect();
        reduced.push(remapped);
    }
    Ok(Slice {
        degree: d,
        monomials,
        index,
        standard,
        reduced,
    })
}

/// A refined component `S_{dominated}/S_{strictly dominated}` with coset
/// representatives and the augmented solver that expresses group images
/// over them.
pub struct RefinedComponent {
    pub rho: Partition,
    pub degree: usize,
    /// coset representatives with their augmentation index in the solver
    reps: Vec<(Monomial, usize)>,
    solver: RowReducer,
}

impl RefinedComponent {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_representatives(&self) -> Vec<&Monomial> {
        self.reps.iter().map(|(m, _)| m).collect()
    }
}

/// Graded trace of `g` on the span of all monomials (no quotient) whose
/// exponent multiset is exactly `rho`, read in `n` variables.
pub fn free_trace_on_orbit(g: &ColoredPermutation, rho: &Partition, n: usize) -> CyclotomicNumber {
    let mut acc = CyclotomicNumber::zero(g.r());
    if rho.len() > n {
        return acc;
    }
    let mut exps = rho.padded(n);
    exps.sort_unstable();
    // iterate distinct permutations of the exponent multiset
    loop {
        let m = Monomial::new(exps.clone());
        let (phase, image) = act_on_monomial(g, &m);
        if image == m {
            acc = acc.add(&CyclotomicNumber::root_power(g.r(), phase));
        }
        if !next_permutation(&mut exps) {
            break;
        }
    }
    acc
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Outcome of a sweep comparing the oracle against the closed-form
/// multiplicity rule across every partition of every graded degree.
#[derive(Debug, Default)]
pub struct VerifyReport {
    pub components_checked: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the oracle's character decomposition of every `R_{n,k,rho}` /
/// `S_{n,k,rho}` against the closed-form counts, including agreement on
/// which `rho` give the zero module.
pub fn verify_multiplicity_rule(n: usize, k: usize, r: usize) -> Result<VerifyReport> {
    let quotient = GradedQuotient::build(n, k, r, None)?;
    let table = CharacterTable::build(n, r)?;
    let mut report = VerifyReport::default();
    // closed-form side, cached per shape: descent sets and colors of every
    // standard Young r-tableau
    let shapes = RPartition::all_of(n, r);
    let mut tableau_stats: Vec<(
        RPartition,
        Vec<(std::collections::BTreeSet<usize>, Vec<usize>)>,
    )> = Vec::new();
    for shape in &shapes {
        let stats = crate::tableaux::enumerate_r_syt_unbounded(shape)
            .into_iter()
            .map(|t| {
                let st = t.stats();
                (st.des_set, st.c)
            })
            .collect();
        tableau_stats.push((shape.clone(), stats));
    }
    let top = quotient.slices().len();
    for d in 0..top {
        use rayon::prelude::*;
        let rhos = partitions_of(d);
        // components are independent; fold the per-rho results in order
        let results: Vec<(usize, Vec<String>)> = rhos
            .par_iter()
            .map(|rho| -> Result<(usize, Vec<String>)> {
                let comp = quotient.refined_component(rho)?;
                let oracle_table = quotient.decompose(&comp, &table)?;
                let valid = rho.classify(n, k, r)?.is_exponent_of_descent_monomial;
                let (full, tail, residues) = if valid {
                    (
                        rho.r_descents(r, n)?,
                        rho.descents_in_range(r, n - k + 1, n)?,
                        (1..=n).map(|i| rho.part(i) % r).collect::<Vec<_>>(),
                    )
                } else {
                    (Default::default(), Default::default(), Vec::new())
                };
                let mut mismatches = Vec::new();
                for (shape, stats) in &tableau_stats {
                    let formula = if !valid {
                        0
                    } else {
                        stats
                            .iter()
                            .filter(|(des, colors)| {
                                colors == &residues
                                    && tail.is_subset(des)
                                    && des.is_subset(&full)
                            })
                            .count()
                    };
                    let oracle = oracle_table.get(shape).copied().unwrap_or(0);
                    if formula != oracle {
                        mismatches.push(format!(
                            "n={n} k={k} r={r} rho={rho} shape={shape}: formula {formula} vs oracle {oracle}"
                        ));
                    }
                }
                Ok((comp.dim(), mismatches))
            })
            .collect::<Result<_>>()?;
        let mut degree_total = 0usize;
        for (dim, mismatches) in results {
            degree_total += dim;
            report.components_checked += 1;
            report.mismatches.extend(mismatches);
        }
        if degree_total != quotient.dim(d) {
            report.mismatches.push(format!(
                "n={n} k={k} r={r} degree {d}: refined dims sum to {degree_total}, slice has {}",
                quotient.dim(d)
            ));
        }
    }
    Ok(report)
}
