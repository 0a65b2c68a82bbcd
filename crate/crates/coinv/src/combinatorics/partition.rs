//! Integer partitions and r-tuples of partitions.
//!
//! Partitions are stored with trailing zeros trimmed; operations that need a
//! length-n context (exponent partitions, descent ranges) take `n` explicitly
//! and read missing parts as zero. Equality is therefore equality after
//! padding to a common length.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from a weakly decreasing sequence; trailing zeros are trimmed.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self::new_unchecked(parts))
    }

    pub(crate) fn new_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Sort an arbitrary multiset of non-negative integers into a partition.
    pub fn from_multiset(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new_unchecked(values)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 1-based part access; parts beyond the stored length read as 0.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Conjugate partition: column lengths of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let cols = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts: cols }
    }

    /// r-descents inside `[lo, hi]` (1-based, inclusive), reading the part
    /// after the last stored one as 0: positions `i` with
    /// `floor(part_i / r) > floor(part_{i+1} / r)`.
    pub fn descents_in_range(&self, r: usize, lo: usize, hi: usize) -> Result<BTreeSet<usize>> {
        if r == 0 {
            return Err(Error::invalid("r must be positive"));
        }
        if lo < 1 || lo > hi {
            return Err(Error::invalid(format!("bad descent range [{lo},{hi}]")));
        }
        Ok((lo..=hi)
            .filter(|&i| self.part(i) / r > self.part(i + 1) / r)
            .collect())
    }

    /// All r-descents of the partition read with `n` parts.
    pub fn r_descents(&self, r: usize, n: usize) -> Result<BTreeSet<usize>> {
        self.descents_in_range(r, 1, n)
    }

    /// Validity flags for a prospective exponent partition of `R_{n,k}` /
    /// `S_{n,k}`: at most `n` parts each below `rk`, with the last `k` parts
    /// (in length-n context) forming an r-descent partition.
    pub fn classify(&self, n: usize, k: usize, r: usize) -> Result<PartitionClass> {
        if r == 0 || k == 0 || k > n {
            return Err(Error::invalid(format!(
                "need r >= 1 and 1 <= k <= n, got n={n} k={k} r={r}"
            )));
        }
        let is_nk_partition = self.len() <= n && self.parts.iter().all(|&p| p < r * k);
        let is_r_descent_partition = self.is_r_descent_partition(r, n);
        let tail: Vec<usize> = self.padded(n)[n - k..].to_vec();
        let is_exponent_of_descent_monomial =
            is_nk_partition && is_r_descent_partition_slice(&tail, r);
        Ok(PartitionClass {
            is_nk_partition,
            is_r_descent_partition,
            is_exponent_of_descent_monomial,
        })
    }

    /// r-descent-partition test in a length-`n` context: consecutive
    /// differences at most `r` and the `n`-th part below `r`.
    pub fn is_r_descent_partition(&self, r: usize, n: usize) -> bool {
        self.len() <= n && is_r_descent_partition_slice(&self.padded(n), r)
    }
}

fn is_r_descent_partition_slice(parts: &[usize], r: usize) -> bool {
    let last_ok = parts.last().is_none_or(|&p| p < r);
    last_ok && parts.windows(2).all(|w| w[0] - w[1] <= r)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Outcome of comparing two equal-size partitions in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Dominance comparison of partitions of equal total size: `Less` means every
/// prefix sum of the left is at most the corresponding prefix sum of the
/// right, with at least one strict.
pub fn dominance_compare(lhs: &Partition, rhs: &Partition) -> Result<Dominance> {
    if lhs.size() != rhs.size() {
        return Err(Error::SizeMismatch {
            left: lhs.size(),
            right: rhs.size(),
        });
    }
    let n = lhs.len().max(rhs.len());
    let mut le = true;
    let mut ge = true;
    let mut sum_l = 0usize;
    let mut sum_r = 0usize;
    for i in 1..=n {
        sum_l += lhs.part(i);
        sum_r += rhs.part(i);
        if sum_l > sum_r {
            le = false;
        }
        if sum_l < sum_r {
            ge = false;
        }
    }
    Ok(match (le, ge) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Less,
        (false, true) => Dominance::Greater,
        (false, false) => Dominance::Incomparable,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionClass {
    pub is_nk_partition: bool,
    pub is_r_descent_partition: bool,
    pub is_exponent_of_descent_monomial: bool,
}

/// The unique descent partition with `n` parts (trailing zeros implied) whose
/// descent set is exactly `set`: part `i` counts the elements of `set` that
/// are at least `i`.
pub fn descent_partition_from_set(set: &BTreeSet<usize>, n: usize) -> Result<Partition> {
    if set.iter().any(|&s| s == 0 || s >= n) {
        return Err(Error::invalid(format!(
            "descent set {set:?} not inside 1..{}",
            n.saturating_sub(1)
        )));
    }
    let parts = (1..=n)
        .map(|i| set.iter().filter(|&&s| s >= i).count())
        .collect();
    Ok(Partition::new_unchecked(parts))
}

/// All partitions of `d`, in descending lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    partitions_of_bounded(d, d, d)
}

/// All partitions of `d` with at most `max_parts` parts, each at most
/// `max_part`, in descending lexicographic order.
pub fn partitions_of_bounded(d: usize, max_parts: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new_unchecked(current.clone()));
            return;
        }
        if slots == 0 || max_part == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p, slots - 1, current, out);
            current.pop();
        }
    }
    rec(d, max_part, max_parts, &mut current, &mut out);
    out
}

/// An r-tuple of partitions; irreducibles and classes of `G(r,1,n)` are
/// indexed by these.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RPartition {
    components: Vec<Partition>,
}

impl RPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("r-partition needs at least one component"));
        }
        Ok(RPartition { components })
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c]
    }

    /// Total number of boxes across components.
    pub fn size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// All r-partitions of `n` with `r` components, in lexicographic order.
    pub fn all_of(n: usize, r: usize) -> Vec<RPartition> {
        let mut out = Vec::new();
        let mut current: Vec<Partition> = Vec::new();
        fn rec(
            remaining: usize,
            comps_left: usize,
            current: &mut Vec<Partition>,
            out: &mut Vec<RPartition>,
        ) {
            if comps_left == 0 {
                if remaining == 0 {
                    out.push(RPartition {
                        components: current.clone(),
                    });
                }
                return;
            }
            for s in 0..=remaining {
                for p in partitions_of(s) {
                    current.push(p);
                    rec(remaining - s, comps_left - 1, current, out);
                    current.pop();
                }
            }
        }
        rec(n, r, &mut current, &mut out);
        out
    }
}

impl fmt::Debug for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}
