//! Standard, semistandard, and standard Young r-tableaux with descent
//! statistics, plus the row-insertion RSK correspondence.
//!
//! Skew shapes appear only through the filling enumerator
//! [`for_each_skew_ssyt`], which is what the ribbon Schur polynomials are
//! built from.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, RPartition};
use crate::error::{Error, Result};

/// Resource guard for straight-shape enumeration.
const MAX_SYT_BOXES: usize = 12;
/// Resource guard for r-tableau enumeration.
const MAX_RSYT_BOXES: usize = 10;

/// A standard Young tableau: rows strictly increase, columns strictly
/// increase, entries are exactly `1..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        validate_tableau_shape(&rows)?;
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::invalid(format!("entries are not 1..{n}")));
                }
                seen[v] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid("rows must strictly increase"));
            }
        }
        check_columns_strict(&rows)?;
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new_unchecked(self.rows.iter().map(|r| r.len()).collect())
    }

    /// Row index (0-based) of each value; `row_of[v-1]` is the row containing `v`.
    fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (ri, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = ri;
            }
        }
        out
    }

    /// Descent set: `i` with `i+1` strictly below `i`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let row_of = self.row_of();
        (1..self.n())
            .filter(|&i| row_of[i] > row_of[i - 1])
            .collect()
    }

    pub fn descents_in_range(&self, lo: usize, hi: usize) -> BTreeSet<usize> {
        self.descent_set()
            .into_iter()
            .filter(|&i| i >= lo && i <= hi)
            .collect()
    }

    /// Descent set, major index, and the tail counts `d_i`.
    pub fn descents(&self) -> SytStats {
        let des_set = self.descent_set();
        let n = self.n();
        let maj = des_set.iter().sum();
        let d = (1..=n)
            .map(|i| des_set.iter().filter(|&&s| s >= i).count())
            .collect();
        SytStats { des_set, maj, d }
    }

    /// Row-reading word, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SytStats {
    pub des_set: BTreeSet<usize>,
    pub maj: usize,
    pub d: Vec<usize>,
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, positive entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        validate_tableau_shape(&rows)?;
        for row in &rows {
            if row.iter().any(|&v| v == 0) {
                return Err(Error::invalid("entries must be positive"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::invalid("rows must weakly increase"));
            }
        }
        check_columns_strict(&rows)?;
        Ok(SemistandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new_unchecked(self.rows.iter().map(|r| r.len()).collect())
    }

    /// `wt(T)[i-1]` counts the entries equal to `i`, up to the largest entry.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut wt = vec![0; max];
        for row in &self.rows {
            for &v in row {
                wt[v - 1] += 1;
            }
        }
        wt
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn validate_tableau_shape(rows: &[Vec<usize>]) -> Result<()> {
    if rows.iter().any(|r| r.is_empty()) {
        return Err(Error::invalid("empty row in tableau"));
    }
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::invalid("row lengths must weakly decrease"));
    }
    Ok(())
}

fn check_columns_strict(rows: &[Vec<usize>]) -> Result<()> {
    for i in 1..rows.len() {
        for j in 0..rows[i].len() {
            if rows[i - 1][j] >= rows[i][j] {
                return Err(Error::invalid("columns must strictly increase"));
            }
        }
    }
    Ok(())
}

/// All standard Young tableaux of shape `lambda`, sorted by reading word.
pub fn enumerate_syt(lambda: &Partition) -> Result<Vec<StandardTableau>> {
    if lambda.size() > MAX_SYT_BOXES {
        return Err(Error::ResourceLimit(format!(
            "SYT enumeration capped at {MAX_SYT_BOXES} boxes; got {}",
            lambda.size()
        )));
    }
    Ok(enumerate_syt_unbounded(lambda))
}

/// Unguarded variant of [`enumerate_syt`].
pub fn enumerate_syt_unbounded(lambda: &Partition) -> Vec<StandardTableau> {
    // peel corners for n, n-1, ..., 1
    let mut out = Vec::new();
    let n = lambda.size();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    let mut shape: Vec<usize> = lambda.parts().to_vec();
    fn rec(
        value: usize,
        shape: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if value == 0 {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let is_corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
            if is_corner {
                shape[i] -= 1;
                rows[i][shape[i]] = value;
                rec(value - 1, shape, rows, out);
                shape[i] += 1;
            }
        }
    }
    rec(n, &mut shape, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// `|{T in SYT(lambda) : lo ⊆ Des(T) ⊆ hi}|`.
pub fn count_syt_descents_between(
    lambda: &Partition,
    lo: &BTreeSet<usize>,
    hi: &BTreeSet<usize>,
) -> Result<usize> {
    if !lo.is_subset(hi) {
        return Err(Error::invalid(format!(
            "descent bounds not nested: {lo:?} is not a subset of {hi:?}"
        )));
    }
    let n = lambda.size();
    if hi.iter().any(|&s| s == 0 || s + 1 > n) {
        return Err(Error::invalid(format!(
            "descent bound {hi:?} reaches outside 1..{}",
            n.saturating_sub(1)
        )));
    }
    let table = syt_descent_multiset(lambda);
    Ok(table
        .iter()
        .filter(|(des, _)| lo.is_subset(des) && des.is_subset(hi))
        .map(|(_, count)| count)
        .sum())
}

/// Multiset of descent sets over `SYT(lambda)`, as a map set -> count.
pub fn syt_descent_multiset(lambda: &Partition) -> BTreeMap<BTreeSet<usize>, usize> {
    let mut table = BTreeMap::new();
    for t in enumerate_syt_unbounded(lambda) {
        *table.entry(t.descent_set()).or_insert(0) += 1;
    }
    table
}

/// Visit every semistandard filling of the skew shape `outer/inner` with
/// entries at most `max_entry`. Row `i` of the filling covers the columns of
/// `outer`'s row `i` to the right of `inner`'s row `i`.
pub fn for_each_skew_ssyt<F: FnMut(&[Vec<usize>])>(
    outer: &Partition,
    inner: &Partition,
    max_entry: usize,
    mut visit: F,
) {
    let nrows = outer.len();
    for i in 1..=inner.len().max(nrows) {
        if inner.part(i) > outer.part(i) {
            return; // inner sticks out of outer: empty skew shape
        }
    }
    let mut rows: Vec<Vec<usize>> = (1..=nrows)
        .map(|i| vec![0; outer.part(i) - inner.part(i)])
        .collect();
    let cells: Vec<(usize, usize)> = (0..nrows)
        .flat_map(|i| {
            let lo = inner.part(i + 1);
            let hi = outer.part(i + 1);
            (lo..hi).map(move |j| (i, j))
        })
        .collect();
    // fill row-major; constraints look left and up
    fn rec<F: FnMut(&[Vec<usize>])>(
        idx: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        rows: &mut Vec<Vec<usize>>,
        max_entry: usize,
        visit: &mut F,
    ) {
        if idx == cells.len() {
            visit(rows);
            return;
        }
        let (i, j) = cells[idx];
        let off_i = inner.part(i + 1);
        let mut lo = 1;
        if j > off_i {
            lo = lo.max(rows[i][j - off_i - 1]); // weakly increasing along the row
        }
        if i > 0 {
            let off_up = inner.part(i);
            if j >= off_up && j - off_up < rows[i - 1].len() {
                lo = lo.max(rows[i - 1][j - off_up] + 1); // strictly increasing down the column
            }
        }
        for v in lo..=max_entry {
            rows[i][j - off_i] = v;
            rec(idx + 1, cells, inner, rows, max_entry, visit);
        }
        rows[i][j - off_i] = 0;
    }
    rec(0, &cells, inner, &mut rows, max_entry, &mut visit);
}

/// All semistandard Young tableaux of straight shape `lambda` with entries at
/// most `max_entry`. Empty when `max_entry` is below the number of rows.
pub fn enumerate_ssyt(lambda: &Partition, max_entry: usize) -> Result<Vec<SemistandardTableau>> {
    if lambda.size() > MAX_SYT_BOXES {
        return Err(Error::ResourceLimit(format!(
            "SSYT enumeration capped at {MAX_SYT_BOXES} boxes; got {}",
            lambda.size()
        )));
    }
    let mut out = Vec::new();
    for_each_skew_ssyt(lambda, &Partition::empty(), max_entry, |rows| {
        out.push(SemistandardTableau {
            rows: rows.to_vec(),
        });
    });
    Ok(out)
}

/// A word in the alphabet of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    pub fn weight(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut wt = vec![0; max];
        for &v in &self.0 {
            wt[v - 1] += 1;
        }
        wt
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&x| x > 9);
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 && wide {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Row-insertion RSK: equal entries bump strictly larger ones, which makes
/// `Des(Q) = Des(w)`.
pub fn rsk(word: &Word) -> (SemistandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in word.0.iter().enumerate() {
        let mut carry = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            // leftmost entry strictly greater than the carry
            match p[row].iter().position(|&e| e > carry) {
                Some(pos) => {
                    std::mem::swap(&mut p[row][pos], &mut carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (SemistandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Inverse of [`rsk`]; errors when the shapes differ or `(P,Q)` is not a
/// valid insertion/recording pair.
pub fn rsk_inverse(p: &SemistandardTableau, q: &StandardTableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::invalid(format!(
            "shape mismatch: {} vs {}",
            p.shape(),
            q.shape()
        )));
    }
    let n = q.n();
    let mut prows = p.rows.clone();
    let mut out = vec![0usize; n];
    for value in (1..=n).rev() {
        // locate `value` in Q; it must sit at the end of its current row
        let mut row = None;
        for (ri, r) in q.rows.iter().enumerate() {
            if let Some(ci) = r.iter().position(|&v| v == value) {
                if ci + 1 != prows[ri].len() {
                    return Err(Error::invalid(
                        "recording tableau does not describe an insertion order",
                    ));
                }
                row = Some(ri);
                break;
            }
        }
        let row = row.ok_or_else(|| Error::invalid("value missing from recording tableau"))?;
        let mut carry = prows[row].pop().unwrap();
        for up in (0..row).rev() {
            // rightmost entry strictly less than the carry
            let pos = prows[up]
                .iter()
                .rposition(|&e| e < carry)
                .ok_or_else(|| Error::invalid("reverse bump failed; invalid pair"))?;
            std::mem::swap(&mut prows[up][pos], &mut carry);
        }
        out[value - 1] = carry;
    }
    Ok(Word(out))
}

/// A standard Young r-tableau: `r` tableau-shaped components jointly filled
/// with `1..n`, each component increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardRTableau {
    components: Vec<Vec<Vec<usize>>>,
}

impl StandardRTableau {
    pub fn new(components: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("need at least one component"));
        }
        let n: usize = components
            .iter()
            .map(|c| c.iter().map(|r| r.len()).sum::<usize>())
            .sum();
        let mut seen = vec![false; n + 1];
        for comp in &components {
            if comp.is_empty() {
                continue;
            }
            validate_tableau_shape(comp)?;
            for row in comp {
                if row.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::invalid("rows must strictly increase"));
                }
                for &v in row {
                    if v == 0 || v > n || seen[v] {
                        return Err(Error::invalid(format!("entries are not 1..{n}")));
                    }
                    seen[v] = true;
                }
            }
            check_columns_strict(comp)?;
        }
        Ok(StandardRTableau { components })
    }

    pub fn components(&self) -> &[Vec<Vec<usize>>] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn n(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.iter().map(|r| r.len()).sum::<usize>())
            .sum()
    }

    pub fn shape(&self) -> RPartition {
        RPartition::new(
            self.components
                .iter()
                .map(|c| Partition::new_unchecked(c.iter().map(|r| r.len()).collect()))
                .collect(),
        )
        .expect("at least one component")
    }

    /// `(component, row)` of each value, 0-based.
    fn position_of(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.n()];
        for (ci, comp) in self.components.iter().enumerate() {
            for (ri, row) in comp.iter().enumerate() {
                for &v in row {
                    out[v - 1] = (ci, ri);
                }
            }
        }
        out
    }

    /// Descents: `i+1` lives in a later component, or strictly below `i`
    /// within the same component.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let pos = self.position_of();
        (1..self.n())
            .filter(|&i| {
                let (c0, r0) = pos[i - 1];
                let (c1, r1) = pos[i];
                c1 > c0 || (c1 == c0 && r1 > r0)
            })
            .collect()
    }

    /// Full statistics: descent set, colors, flags, and the flag major index
    /// `maj = sum_i (r*d_i + c_i)`.
    pub fn stats(&self) -> RTableauStats {
        let n = self.n();
        let r = self.r();
        let des_set = self.descent_set();
        let d: Vec<usize> = (1..=n)
            .map(|i| des_set.iter().filter(|&&s| s >= i).count())
            .collect();
        let pos = self.position_of();
        let c: Vec<usize> = (0..n).map(|i| pos[i].0).collect();
        let f: Vec<usize> = (0..n).map(|i| r * d[i] + c[i]).collect();
        let maj = f.iter().sum();
        RTableauStats {
            des_set,
            c,
            d,
            f,
            maj,
        }
    }
}

impl fmt::Display for StandardRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ci, comp) in self.components.iter().enumerate() {
            if ci > 0 {
                write!(f, " ; ")?;
            }
            write!(f, "[")?;
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, "|")?;
                }
                for (j, v) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTableauStats {
    pub des_set: BTreeSet<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub f: Vec<usize>,
    pub maj: usize,
}

/// All standard Young r-tableaux of shape `shape`.
pub fn enumerate_r_syt(shape: &RPartition) -> Result<Vec<StandardRTableau>> {
    if shape.size() > MAX_RSYT_BOXES {
        return Err(Error::ResourceLimit(format!(
            "r-tableau enumeration capped at {MAX_RSYT_BOXES} boxes; got {}",
            shape.size()
        )));
    }
    Ok(enumerate_r_syt_unbounded(shape))
}

/// Unguarded variant of [`enumerate_r_syt`].
pub fn enumerate_r_syt_unbounded(shape: &RPartition) -> Vec<StandardRTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut comp_rows: Vec<Vec<Vec<usize>>> = shape
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&l| vec![0; l]).collect())
        .collect();
    let mut shapes: Vec<Vec<usize>> = shape
        .components()
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    fn rec(
        value: usize,
        shapes: &mut Vec<Vec<usize>>,
        comp_rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<StandardRTableau>,
    ) {
        if value == 0 {
            out.push(StandardRTableau {
                components: comp_rows.clone(),
            });
            return;
        }
        for c in 0..shapes.len() {
            for i in 0..shapes[c].len() {
                let is_corner = shapes[c][i] > 0
                    && (i + 1 == shapes[c].len() || shapes[c][i + 1] < shapes[c][i]);
                if is_corner {
                    shapes[c][i] -= 1;
                    comp_rows[c][i][shapes[c][i]] = value;
                    rec(value - 1, shapes, comp_rows, out);
                    shapes[c][i] += 1;
                }
            }
        }
    }
    rec(n, &mut shapes, &mut comp_rows, &mut out);
    out
}
