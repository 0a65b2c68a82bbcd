//! Exact incremental Gaussian elimination over the rationals, with optional
//! augmentation columns for expressing vectors over the fed generators.
//!
//! Rows are sparse `(column, coefficient)` lists; elimination walks columns
//! in ascending order, so pivot choice always lands on the smallest column
//! index still present. Callers order their columns so that index 0 is the
//! preferred (largest) pivot target.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

pub type SparseRow = Vec<(usize, BigRational)>;

pub struct RowReducer {
    ncols: usize,
    naug: usize,
    /// pivot column -> (normalized row, augmentation of that row)
    pivots: BTreeMap<usize, (SparseRow, Vec<BigRational>)>,
}

impl RowReducer {
    pub fn new(ncols: usize, naug: usize) -> Self {
        RowReducer {
            ncols,
            naug,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Columns carrying no pivot, ascending.
    pub fn standard_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    fn eliminate(
        &self,
        row: &SparseRow,
        aug: &[BigRational],
    ) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut acc = vec![BigRational::zero(); self.ncols];
        for (c, v) in row {
            acc[*c] += v;
        }
        let mut acc_aug = aug.to_vec();
        acc_aug.resize(self.naug, BigRational::zero());
        for col in 0..self.ncols {
            if acc[col].is_zero() {
                continue;
            }
            if let Some((prow, paug)) = self.pivots.get(&col) {
                let factor = std::mem::replace(&mut acc[col], BigRational::zero());
                for (c, v) in prow {
                    if *c != col {
                        let delta = &factor * v;
                        acc[*c] -= delta;
                    }
                }
                for (i, a) in paug.iter().enumerate() {
                    let delta = &factor * a;
                    acc_aug[i] -= delta;
                }
            }
        }
        (acc, acc_aug)
    }

    /// Reduce and, if independent, store as a new pivot row (normalized to a
    /// unit leading coefficient). Returns the pivot column, or `None` when
    /// the row lies in the current span.
    pub fn insert(&mut self, row: SparseRow, aug: Vec<BigRational>) -> Option<usize> {
        let (acc, acc_aug) = self.eliminate(&row, &aug);
        let lead = (0..self.ncols).find(|&c| !acc[c].is_zero())?;
        let lead_coeff = acc[lead].clone();
        let srow: SparseRow = acc
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v / &lead_coeff))
            .collect();
        let saug: Vec<BigRational> = acc_aug.into_iter().map(|a| a / &lead_coeff).collect();
        self.pivots.insert(lead, (srow, saug));
        Some(lead)
    }

    /// The residual of `row` after eliminating all pivots, as a sparse row.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let (acc, _) = self.eliminate(row, &[]);
        acc.into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Express `row` over the fed generators: `Some(combo)` with
    /// `row = sum_i combo_i * gen_i` read through the augmentations, or
    /// `None` when `row` is outside the span.
    pub fn express(&self, row: &SparseRow) -> Option<Vec<BigRational>> {
        let (acc, acc_aug) = self.eliminate(row, &[]);
        if acc.iter().any(|v| !v.is_zero()) {
            return None;
        }
        // eliminate() subtracted pivot augmentations, so negate to express
        Some(acc_aug.into_iter().map(|a| -a).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, q(v))).collect()
    }

    #[test]
    fn rank_and_reduce() {
        let mut red = RowReducer::new(3, 0);
        assert_eq!(red.insert(row(&[(0, 1), (1, 1)]), vec![]), Some(0));
        assert_eq!(red.insert(row(&[(1, 2)]), vec![]), Some(1));
        // dependent row
        assert_eq!(red.insert(row(&[(0, 3), (1, 5)]), vec![]), None);
        assert_eq!(red.rank(), 2);
        assert_eq!(red.standard_columns(), vec![2]);
        let res = red.reduce(&row(&[(0, 1), (2, 4)]));
        assert_eq!(res, row(&[(2, 4)]));
    }

    #[test]
    fn express_combinations() {
        let mut red = RowReducer::new(4, 2);
        let g0 = row(&[(0, 1), (2, 1)]);
        let g1 = row(&[(1, 1), (2, 1)]);
        red.insert(g0, vec![q(1), q(0)]);
        red.insert(g1, vec![q(0), q(1)]);
        // 2*g0 - 3*g1
        let target = row(&[(0, 2), (1, -3), (2, -1)]);
        let combo = red.express(&target).unwrap();
        assert_eq!(combo, vec![q(2), q(-3)]);
        assert!(red.express(&row(&[(3, 1)])).is_none());
    }

    #[test]
    fn pivot_normalization_keeps_exactness() {
        let mut red = RowReducer::new(2, 0);
        red.insert(row(&[(0, 3), (1, 7)]), vec![]);
        let res = red.reduce(&row(&[(0, 6), (1, 14)]));
        assert!(res.is_empty());
        let res = red.reduce(&row(&[(0, 6), (1, 13)]));
        assert_eq!(res, row(&[(1, -1)]));
    }
}
