//! Character tables: the Murnaghan-Nakayama rule for the symmetric group
//! and its color-twisted extension for the wreath products `G(r,1,n)`,
//! together with conjugacy-class bookkeeping.
//!
//! The wreath rule is validated internally (dimensions, reduction to `r=1`,
//! exact row orthogonality) rather than against any external table.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{ColoredPermutation, Partition, Permutation, RPartition};
use crate::error::{Error, Result};
use crate::oracle::cyclotomic::CyclotomicNumber;

/// All ways to remove a border strip of `size` boxes: `(remaining shape,
/// strip height)` pairs.
pub fn border_strips(lambda: &Partition, size: usize) -> Vec<(Partition, usize)> {
    let rows = lambda.len();
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    for top in 1..=rows {
        for bottom in top..=rows {
            // the strip spans rows top..bottom; its bottom row starts at c
            let c_signed = lambda.part(top) as i64 + (bottom - top) as i64 + 1 - size as i64;
            if c_signed < 1 {
                continue;
            }
            let c = c_signed as usize;
            if c > lambda.part(bottom) || c < lambda.part(bottom + 1) + 1 {
                continue;
            }
            let mut parts: Vec<usize> = (1..=rows).map(|i| lambda.part(i)).collect();
            for t in top..bottom {
                parts[t - 1] = lambda.part(t + 1) - 1;
            }
            parts[bottom - 1] = c - 1;
            out.push((Partition::new_unchecked(parts), bottom - top));
        }
    }
    out
}

/// Irreducible symmetric-group character value, by the Murnaghan-Nakayama
/// border-strip recursion.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(sn_character_rec(lambda, mu.parts(), &mut memo))
}

fn sn_character_rec(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.parts().to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let part = mu[0];
    let rest = &mu[1..];
    let mut acc = 0i64;
    for (remaining, height) in border_strips(lambda, part) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        acc += sign * sn_character_rec(&remaining, rest, memo);
    }
    memo.insert(key, acc);
    acc
}

/// Cycle data of a wreath class: `(length, color)` per cycle.
fn class_cycles(label: &RPartition) -> Vec<(usize, usize)> {
    let mut cycles = Vec::new();
    for (color, comp) in label.components().iter().enumerate() {
        for &len in comp.parts() {
            cycles.push((len, color));
        }
    }
    // canonical processing order: long cycles first, then color
    cycles.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    cycles
}

/// Irreducible `G(r,1,n)` character: strips of each cycle's length are
/// removed from every component `j`, weighted by `xi^{j*color}` and the
/// usual strip sign.
pub fn wreath_character(
    shape: &RPartition,
    class: &RPartition,
    r: usize,
) -> Result<CyclotomicNumber> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: class.size(),
        });
    }
    if shape.r() != r || class.r() != r {
        return Err(Error::invalid("component count must match r"));
    }
    let cycles = class_cycles(class);
    let mut memo = HashMap::new();
    Ok(wreath_character_rec(
        &shape.components().to_vec(),
        &cycles,
        r,
        &mut memo,
    ))
}

type WreathMemo = HashMap<(Vec<Vec<usize>>, usize), CyclotomicNumber>;

fn wreath_character_rec(
    shape: &[Partition],
    cycles: &[(usize, usize)],
    r: usize,
    memo: &mut WreathMemo,
) -> CyclotomicNumber {
    if cycles.is_empty() {
        let empty = shape.iter().all(|p| p.is_empty());
        return if empty {
            CyclotomicNumber::one(r)
        } else {
            CyclotomicNumber::zero(r)
        };
    }
    let key: (Vec<Vec<usize>>, usize) = (
        shape.iter().map(|p| p.parts().to_vec()).collect(),
        cycles.len(),
    );
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (len, color) = cycles[cycles.len() - 1];
    let rest = &cycles[..cycles.len() - 1];
    let mut acc = CyclotomicNumber::zero(r);
    for j in 0..r {
        let weight = CyclotomicNumber::root_power(r, j * color);
        for (remaining, height) in border_strips(&shape[j], len) {
            let mut next = shape.to_vec();
            next[j] = remaining;
            let sub = wreath_character_rec(&next, rest, r, memo);
            let term = weight.mul(&sub);
            acc = if height % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// A conjugacy class of `G(r,1,n)`: cycle lengths split by cycle color.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub label: RPartition,
    pub size: u64,
    pub representative: ColoredPermutation,
}

/// `|G(r,1,n)| = r^n n!`.
pub fn group_order(n: usize, r: usize) -> u64 {
    let fact: u64 = (1..=n as u64).product::<u64>().max(1);
    (r as u64).pow(n as u32) * fact
}

fn centralizer_order(label: &RPartition, r: usize) -> u64 {
    let mut z = 1u64;
    for comp in label.components() {
        // z_mu = prod over part sizes i of i^{m_i} m_i!
        let mut mult: HashMap<usize, u64> = HashMap::new();
        for &part in comp.parts() {
            *mult.entry(part).or_insert(0) += 1;
        }
        for (part, m) in mult {
            z *= (part as u64).pow(m as u32);
            z *= (1..=m).product::<u64>().max(1);
        }
        z *= (r as u64).pow(comp.len() as u32);
    }
    z
}

/// A representative element: one cycle per part, the cycle's color carried
/// on its first position.
pub fn class_representative(label: &RPartition) -> ColoredPermutation {
    let n = label.size();
    let r = label.r();
    let mut word: Vec<usize> = (1..=n).collect();
    let mut colors = vec![0usize; n];
    let mut pos = 0usize;
    for (len, color) in class_cycles(label) {
        // cycle pos+1 -> pos+2 -> ... -> pos+len -> pos+1
        for t in 0..len {
            word[pos + t] = if t + 1 < len { pos + t + 2 } else { pos + 1 };
        }
        colors[pos] = color;
        pos += len;
    }
    ColoredPermutation::new(Permutation::new(word).expect("cycle word"), colors, r)
        .expect("colors bounded")
}

/// The class of an element: cycle lengths of the word, colored by the sum
/// of the colors around each cycle.
pub fn class_label(g: &ColoredPermutation) -> RPartition {
    let n = g.n();
    let r = g.r();
    let mut seen = vec![false; n + 1];
    let mut comps: Vec<Vec<usize>> = vec![Vec::new(); r];
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut color = 0usize;
        let mut i = start;
        loop {
            seen[i] = true;
            len += 1;
            color += g.colors()[i - 1];
            i = g.word()[i - 1];
            if i == start {
                break;
            }
        }
        comps[color % r].push(len);
    }
    RPartition::new(comps.into_iter().map(Partition::from_multiset).collect())
        .expect("r components")
}

/// All conjugacy classes of `G(r,1,n)`, labels in canonical order.
pub fn conjugacy_classes(n: usize, r: usize) -> Vec<ConjugacyClass> {
    let order = group_order(n, r);
    RPartition::all_of(n, r)
        .into_iter()
        .map(|label| {
            let size = order / centralizer_order(&label, r);
            let representative = class_representative(&label);
            ConjugacyClass {
                label,
                size,
                representative,
            }
        })
        .collect()
}

/// The full character table of `G(r,1,n)`.
pub struct CharacterTable {
    pub n: usize,
    pub r: usize,
    pub irreps: Vec<RPartition>,
    pub classes: Vec<ConjugacyClass>,
    /// `values[i][j]` = character of irrep `i` at class `j`.
    pub values: Vec<Vec<CyclotomicNumber>>,
}

impl CharacterTable {
    pub fn build(n: usize, r: usize) -> Result<CharacterTable> {
        let irreps = RPartition::all_of(n, r);
        let classes = conjugacy_classes(n, r);
        let mut values = Vec::with_capacity(irreps.len());
        for shape in &irreps {
            let mut row = Vec::with_capacity(classes.len());
            for class in &classes {
                row.push(wreath_character(shape, &class.label, r)?);
            }
            values.push(row);
        }
        Ok(CharacterTable {
            n,
            r,
            irreps,
            classes,
            values,
        })
    }

    /// Exact row orthogonality under the class-weighted inner product.
    pub fn check_orthogonality(&self) -> Result<()> {
        let order = BigRational::from_integer(group_order(self.n, self.r).into());
        for a in 0..self.irreps.len() {
            for b in 0..self.irreps.len() {
                let mut acc = CyclotomicNumber::zero(self.r);
                for (j, class) in self.classes.iter().enumerate() {
                    let w = CyclotomicNumber::from_rational(
                        self.r,
                        BigRational::from_integer(class.size.into()),
                    );
                    acc = acc.add(&w.mul(&self.values[a][j]).mul(&self.values[b][j].conj()));
                }
                let want = if a == b {
                    order.clone()
                } else {
                    BigRational::zero()
                };
                match acc.as_rational() {
                    Some(v) if v == want => {}
                    other => {
                        return Err(Error::Internal(format!(
                            "orthogonality failed at ({}, {}): got {other:?}",
                            self.irreps[a], self.irreps[b]
                        )))
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{all_colored_permutations, partitions_of};
    use crate::representations::{r_syt_count, syt_count};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn border_strip_shapes() {
        // removing 2 from (2,2): bottom row (sign +) or the vertical domino
        // at the right edge (sign -)
        let strips = border_strips(&p(&[2, 2]), 2);
        assert_eq!(strips.len(), 2);
        assert!(strips.contains(&(p(&[2]), 0)));
        assert!(strips.contains(&(p(&[1, 1]), 1)));
        // no connected 2-strip inside (2,1)
        assert!(border_strips(&p(&[2, 1]), 2).is_empty());
        // whole-shape hooks
        let strips = border_strips(&p(&[2, 1]), 3);
        assert_eq!(strips, vec![(Partition::empty(), 1)]);
    }

    #[test]
    fn sn_character_values() {
        // trivial character is 1 everywhere
        for mu in partitions_of(5) {
            assert_eq!(sn_character(&p(&[5]), &mu).unwrap(), 1);
        }
        // identity column carries dimensions
        for d in 1..=6usize {
            let ones = Partition::new(vec![1; d]).unwrap();
            for lam in partitions_of(d) {
                assert_eq!(sn_character(&lam, &ones).unwrap(), syt_count(&lam) as i64);
            }
        }
        // sign character of S_2
        assert_eq!(sn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert!(sn_character(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn sn_character_table_orthogonality() {
        for n in 1..=5usize {
            let table = CharacterTable::build(n, 1).unwrap();
            table.check_orthogonality().unwrap();
        }
    }

    #[test]
    fn wreath_reduces_to_sn() {
        for n in 1..=5usize {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let shape = RPartition::new(vec![lam.clone()]).unwrap();
                    let class = RPartition::new(vec![mu.clone()]).unwrap();
                    let w = wreath_character(&shape, &class, 1).unwrap();
                    assert_eq!(
                        w.as_rational(),
                        Some(BigRational::from_integer(
                            sn_character(&lam, &mu).unwrap().into()
                        ))
                    );
                }
            }
        }
    }

    #[test]
    fn wreath_trivial_and_dimensions() {
        for n in 1..=3usize {
            for r in 1..=3usize {
                let mut trivial_comps = vec![Partition::empty(); r];
                trivial_comps[0] = p(&[n]);
                let trivial = RPartition::new(trivial_comps).unwrap();
                let id_label = {
                    let mut comps = vec![Partition::empty(); r];
                    comps[0] = Partition::new(vec![1; n]).unwrap();
                    RPartition::new(comps).unwrap()
                };
                for class in RPartition::all_of(n, r) {
                    assert_eq!(
                        wreath_character(&trivial, &class, r).unwrap(),
                        CyclotomicNumber::one(r)
                    );
                }
                for shape in RPartition::all_of(n, r) {
                    let dim = wreath_character(&shape, &id_label, r).unwrap();
                    assert_eq!(
                        dim.as_rational(),
                        Some(BigRational::from_integer(
                            (r_syt_count(&shape) as i64).into()
                        ))
                    );
                }
            }
        }
    }

    #[test]
    fn wreath_orthogonality() {
        for n in 1..=3usize {
            for r in 1..=3usize {
                let table = CharacterTable::build(n, r).unwrap();
                table.check_orthogonality().unwrap();
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=4usize {
            for r in 1..=3usize {
                let classes = conjugacy_classes(n, r);
                let total: u64 = classes.iter().map(|c| c.size).sum();
                assert_eq!(total, group_order(n, r));
                for class in &classes {
                    assert_eq!(class_label(&class.representative), class.label);
                }
            }
        }
    }

    #[test]
    fn class_label_constant_on_conjugates() {
        for (n, r) in [(3usize, 2usize), (2, 3)] {
            let all = all_colored_permutations(n, r);
            for g in all.iter().take(12) {
                let label = class_label(g);
                for h in &all {
                    let conj = h.compose(g).compose(&h.inverse());
                    assert_eq!(class_label(&conj), label);
                }
            }
        }
    }
}
