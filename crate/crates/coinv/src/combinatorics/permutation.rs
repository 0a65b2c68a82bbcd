//! Permutations in one-line notation and r-colored permutations, with their
//! descent statistics.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!("not a permutation: {word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 1-based value lookup: `sigma(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Descent set: positions `i` with `sigma(i) > sigma(i+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn descents_in_range(&self, lo: usize, hi: usize) -> BTreeSet<usize> {
        self.descent_set()
            .into_iter()
            .filter(|&i| i >= lo && i <= hi)
            .collect()
    }

    /// Number of inversions.
    pub fn inversions(&self) -> usize {
        let n = self.word.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] > self.word[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// All descent statistics at once.
    pub fn descents(&self) -> PermDescents {
        let des_set = self.descent_set();
        let n = self.word.len();
        let d = (1..=n)
            .map(|i| des_set.iter().filter(|&&s| s >= i).count())
            .collect();
        PermDescents {
            des: des_set.len(),
            des_set,
            d,
            inv: self.inversions(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 && self.word.len() > 9 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermDescents {
    pub des_set: BTreeSet<usize>,
    pub des: usize,
    /// `d[i-1]` counts descents at position `i` or later.
    pub d: Vec<usize>,
    pub inv: usize,
}

/// All permutations of `{1..n}` in lexicographic order of the word.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::new();
    let mut used = vec![false; n + 1];
    fn rec(n: usize, word: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation { word: word.clone() });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                word.push(v);
                rec(n, word, used, out);
                word.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut word, &mut used, &mut out);
    out
}

/// An element of `G(r,1,n)`: a permutation whose positions carry colors in
/// `{0..r-1}`. Construction reduces colors mod `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredPermutation {
    word: Vec<usize>,
    colors: Vec<usize>,
    r: usize,
}

impl ColoredPermutation {
    pub fn new(word: Permutation, colors: Vec<usize>, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("r must be positive"));
        }
        if colors.len() != word.n() {
            return Err(Error::SizeMismatch {
                left: colors.len(),
                right: word.n(),
            });
        }
        Ok(ColoredPermutation {
            word: word.word().to_vec(),
            colors: colors.into_iter().map(|c| c % r).collect(),
            r,
        })
    }

    pub fn identity(n: usize, r: usize) -> Self {
        ColoredPermutation {
            word: (1..=n).collect(),
            colors: vec![0; n],
            r,
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn permutation(&self) -> Permutation {
        Permutation {
            word: self.word.clone(),
        }
    }

    /// Group product under the matrix convention `x_i -> xi^{c_i} x_{w_i}`:
    /// `self * other` acts as `self` after `other`.
    pub fn compose(&self, other: &ColoredPermutation) -> ColoredPermutation {
        assert_eq!(self.r, other.r);
        assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut word = vec![0usize; n];
        let mut colors = vec![0usize; n];
        for i in 0..n {
            let mid = other.word[i];
            word[i] = self.word[mid - 1];
            colors[i] = (other.colors[i] + self.colors[mid - 1]) % self.r;
        }
        ColoredPermutation {
            word,
            colors,
            r: self.r,
        }
    }

    /// Group inverse under the same convention.
    pub fn inverse(&self) -> ColoredPermutation {
        let n = self.n();
        let mut word = vec![0usize; n];
        let mut colors = vec![0usize; n];
        for i in 0..n {
            let target = self.word[i];
            word[target - 1] = i + 1;
            colors[target - 1] = (self.r - self.colors[i] % self.r) % self.r;
        }
        ColoredPermutation {
            word,
            colors,
            r: self.r,
        }
    }

    /// Descent set: `i` is a descent when `c_i < c_{i+1}`, or the colors tie
    /// and the underlying word drops.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.word.len())
            .filter(|&i| {
                let (ci, cj) = (self.colors[i - 1], self.colors[i]);
                ci < cj || (ci == cj && self.word[i - 1] > self.word[i])
            })
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    /// All descent statistics: the descent set, the tail counts `d_i`, and
    /// the flag values `f_i = r*d_i + c_i`.
    pub fn descents(&self) -> ColoredDescents {
        let des_set = self.descent_set();
        let n = self.word.len();
        let d: Vec<usize> = (1..=n)
            .map(|i| des_set.iter().filter(|&&s| s >= i).count())
            .collect();
        let f = (0..n).map(|i| self.r * d[i] + self.colors[i]).collect();
        ColoredDescents { des_set, d, f }
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.word.len() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}^{}", self.word[i], self.colors[i])?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDescents {
    pub des_set: BTreeSet<usize>,
    pub d: Vec<usize>,
    pub f: Vec<usize>,
}

/// All `r^n * n!` colored permutations, words lexicographic, colors inner.
pub fn all_colored_permutations(n: usize, r: usize) -> Vec<ColoredPermutation> {
    let mut out = Vec::new();
    for perm in all_permutations(n) {
        let mut colors = vec![0usize; n];
        loop {
            out.push(ColoredPermutation {
                word: perm.word().to_vec(),
                colors: colors.clone(),
                r,
            });
            // odometer increment over {0..r-1}^n
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                colors[i] += 1;
                if colors[i] < r {
                    break;
                }
                colors[i] = 0;
            }
            if colors.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_descents_example() {
        let sigma = Permutation::new(vec![3, 1, 4, 2, 7, 8, 6, 5]).unwrap();
        let st = sigma.descents();
        assert_eq!(st.des_set, BTreeSet::from([1, 3, 6, 7]));
        assert_eq!(st.d, vec![4, 3, 3, 2, 2, 2, 1, 0]);
        assert_eq!(sigma.descents_in_range(2, 6), BTreeSet::from([3, 6]));
    }

    #[test]
    fn identity_descents() {
        let id = Permutation::identity(5);
        let st = id.descents();
        assert!(st.des_set.is_empty());
        assert_eq!(st.d, vec![0; 5]);
        assert_eq!(st.inv, 0);
    }

    #[test]
    fn inv_zero_only_for_identity() {
        for sigma in all_permutations(5) {
            assert_eq!(sigma.inversions() == 0, sigma == Permutation::identity(5));
        }
    }

    #[test]
    fn colored_descents_example() {
        // 3^0 5^2 4^2 6^0 1^1 2^1 with r=3
        let g = ColoredPermutation::new(
            Permutation::new(vec![3, 5, 4, 6, 1, 2]).unwrap(),
            vec![0, 2, 2, 0, 1, 1],
            3,
        )
        .unwrap();
        assert_eq!(g.descent_set(), BTreeSet::from([1, 2, 4]));
    }

    #[test]
    fn colored_reduces_to_classical() {
        for sigma in all_permutations(4) {
            let g = ColoredPermutation::new(sigma.clone(), vec![0; 4], 1).unwrap();
            assert_eq!(g.descent_set(), sigma.descent_set());
        }
    }

    #[test]
    fn colored_small_case() {
        let g =
            ColoredPermutation::new(Permutation::new(vec![1, 2]).unwrap(), vec![2, 1], 3).unwrap();
        let st = g.descents();
        assert!(st.des_set.is_empty());
        assert_eq!(st.d, vec![0, 0]);
        assert_eq!(st.f, vec![2, 1]);
    }

    #[test]
    fn d_vector_weakly_decreasing_steps_01() {
        for n in 1..=7usize {
            if n > 6 {
                continue; // n=7 covered once below to keep runtime low
            }
            for sigma in all_permutations(n) {
                let st = sigma.descents();
                for i in 1..=n {
                    assert_eq!(st.d[i - 1], st.des_set.iter().filter(|&&s| s >= i).count());
                }
                for w in st.d.windows(2) {
                    assert!(w[0] == w[1] || w[0] == w[1] + 1);
                }
            }
        }
        let sigma = Permutation::new(vec![4, 7, 1, 3, 6, 2, 5]).unwrap();
        let st = sigma.descents();
        for w in st.d.windows(2) {
            assert!(w[0] == w[1] || w[0] == w[1] + 1);
        }
    }

    #[test]
    fn flag_vector_invariant() {
        // f weakly decreasing with gaps <= r, and f_n = c_n < r
        for n in 1..=5usize {
            for r in 1..=3usize {
                for g in all_colored_permutations(n, r) {
                    let st = g.descents();
                    for w in st.f.windows(2) {
                        assert!(w[0] >= w[1] && w[0] - w[1] <= r, "{g}");
                    }
                    assert_eq!(st.f[n - 1], g.colors()[n - 1]);
                    assert!(st.f[n - 1] < r);
                }
            }
        }
    }

    #[test]
    fn colored_group_axioms() {
        for n in 1..=3usize {
            for r in 1..=3usize {
                let id = ColoredPermutation::identity(n, r);
                for g in all_colored_permutations(n, r) {
                    assert_eq!(g.compose(&g.inverse()), id);
                    assert_eq!(g.inverse().compose(&g), id);
                    assert_eq!(g.compose(&id), g);
                }
                // associativity spot check
                let all = all_colored_permutations(n, r);
                for a in all.iter().take(4) {
                    for b in all.iter().take(4) {
                        for c in all.iter().take(4) {
                            assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn colored_serde_shape() {
        let g =
            ColoredPermutation::new(Permutation::new(vec![2, 1]).unwrap(), vec![1, 0], 2).unwrap();
        let js = serde_json::to_value(&g).unwrap();
        assert_eq!(
            js,
            serde_json::json!({"word": [2,1], "colors": [1,0], "r": 2})
        );
    }
}
