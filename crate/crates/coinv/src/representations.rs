//! The closed-form representation theory of the refined components
//! `R_{n,k,rho}` and `S_{n,k,rho}`: irreducible multiplicities by counting
//! (r-)tableaux with constrained descents, Frobenius images, the ribbon
//! product rewriting, and graded multiplicity generating functions.

use std::collections::BTreeMap;

use crate::combinatorics::{
    partitions_of, partitions_of_bounded, q_binomial, Partition, QPolynomial, RPartition,
};
use crate::error::{Error, Result};
use crate::symfunc::{
    elementary, homogeneous, ribbon_shape, schur_expand, skew_schur, SchurExpansion,
};
use crate::tableaux::{enumerate_r_syt_unbounded, enumerate_syt_unbounded, syt_descent_multiset};

/// Multiplicity of the irreducible indexed by `lambda` in `R_{n,k,rho}`:
/// zero unless `rho` is the exponent partition of an `(n,k)`-descent
/// monomial, else the number of `T` in `SYT(lambda)` with
/// `Des_{n-k+1,n}(rho) ⊆ Des(T) ⊆ Des(rho)`.
pub fn multiplicity_rnk(n: usize, k: usize, rho: &Partition, lambda: &Partition) -> Result<usize> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: n,
        });
    }
    if !rho.classify(n, k, 1)?.is_exponent_of_descent_monomial {
        return Ok(0);
    }
    let full = rho.r_descents(1, n)?;
    let tail = rho.descents_in_range(1, n - k + 1, n)?;
    crate::tableaux::count_syt_descents_between(lambda, &tail, &full)
}

/// Multiplicity of the irreducible indexed by `shape` in `S_{n,k,rho}`:
/// zero unless `rho` is the exponent partition of an `(n,k,r)`-descent
/// monomial, else the number of standard Young r-tableaux of that shape
/// with tail r-descents of `rho` inside `Des(T)` inside all r-descents of
/// `rho`, and colors congruent to `rho` mod `r`.
pub fn multiplicity_snk(
    n: usize,
    k: usize,
    r: usize,
    rho: &Partition,
    shape: &RPartition,
) -> Result<usize> {
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: n,
        });
    }
    if shape.r() != r {
        return Err(Error::SizeMismatch {
            left: shape.r(),
            right: r,
        });
    }
    if !rho.classify(n, k, r)?.is_exponent_of_descent_monomial {
        return Ok(0);
    }
    let full = rho.r_descents(r, n)?;
    let tail = rho.descents_in_range(r, n - k + 1, n)?;
    let residues: Vec<usize> = (1..=n).map(|i| rho.part(i) % r).collect();
    let mut count = 0;
    for t in enumerate_r_syt_unbounded(shape) {
        let st = t.stats();
        if st.c == residues && tail.is_subset(&st.des_set) && st.des_set.is_subset(&full) {
            count += 1;
        }
    }
    Ok(count)
}

/// The Frobenius image of `R_{n,k,rho}` as a multiplicity table over all
/// partitions of `n` (zero entries dropped).
pub fn frob_rnk_rho(n: usize, k: usize, rho: &Partition) -> Result<BTreeMap<Partition, usize>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(n) {
        let c = multiplicity_rnk(n, k, rho, &lambda)?;
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// The Frobenius image of `S_{n,k,rho}` over all r-partitions of `n`.
pub fn frob_snk_rho(
    n: usize,
    k: usize,
    r: usize,
    rho: &Partition,
) -> Result<BTreeMap<RPartition, usize>> {
    let mut out = BTreeMap::new();
    for shape in RPartition::all_of(n, r) {
        let c = multiplicity_snk(n, k, r, rho, &shape)?;
        if c > 0 {
            out.insert(shape, c);
        }
    }
    Ok(out)
}

/// The ribbon data extracted from the descent set of `rho`: the gaps `d_i`
/// between consecutive descents, the split index `p` (descents below
/// `n-k+1`), and the ribbon row lengths, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonData {
    pub gaps: Vec<usize>,
    pub split: usize,
    pub rows: Vec<usize>,
}

pub fn ribbon_data(n: usize, k: usize, rho: &Partition) -> Result<RibbonData> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let descents: Vec<usize> = rho.r_descents(1, n)?.into_iter().collect();
    let mut gaps = Vec::with_capacity(descents.len());
    let mut prev = 0;
    for &s in &descents {
        gaps.push(s - prev);
        prev = s;
    }
    let split = descents.iter().filter(|&&s| s < n - k + 1).count();
    let mut rows = vec![n - prev];
    for i in (split..gaps.len()).rev() {
        rows.push(gaps[i]);
    }
    rows.retain(|&l| l > 0);
    Ok(RibbonData { gaps, split, rows })
}

/// The Frobenius image of `R_{n,k,rho}` computed the other way round: the
/// ribbon Schur polynomial of the trailing descent gaps times complete
/// homogeneous factors for the leading gaps, expanded in the Schur basis.
pub fn frob_ribbon_product(n: usize, k: usize, rho: &Partition) -> Result<SchurExpansion> {
    if !rho.classify(n, k, 1)?.is_exponent_of_descent_monomial {
        return Ok(SchurExpansion::new());
    }
    let data = ribbon_data(n, k, rho)?;
    let mut poly = crate::symfunc::ribbon_schur(&data.rows, n)?;
    for i in 0..data.split {
        poly = poly.mul(&homogeneous(data.gaps[i], n));
    }
    schur_expand(&poly)
}

/// The omega image of the ribbon product: conjugate ribbon times elementary
/// factors, expanded independently (for cross-checking `omega` of the
/// multiplicity table).
pub fn frob_ribbon_product_omega(n: usize, k: usize, rho: &Partition) -> Result<SchurExpansion> {
    if !rho.classify(n, k, 1)?.is_exponent_of_descent_monomial {
        return Ok(SchurExpansion::new());
    }
    let data = ribbon_data(n, k, rho)?;
    let (outer, inner) = ribbon_shape(&data.rows)?;
    let mut poly = skew_schur(&outer.conjugate(), &inner.conjugate(), n);
    for i in 0..data.split {
        poly = poly.mul(&elementary(data.gaps[i], n, 1));
    }
    schur_expand(&poly)
}

/// Generating function for the multiplicity of `lambda` across the graded
/// components of `R_{n,k}`.
pub fn graded_mult_gf(n: usize, k: usize, lambda: &Partition) -> Result<QPolynomial> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: n,
        });
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let mut out = QPolynomial::zero();
    for (des_set, count) in syt_descent_multiset(lambda) {
        let des = des_set.len();
        let maj: usize = des_set.iter().sum();
        let bracket = q_binomial(n - des - 1, n - k);
        let term = (&QPolynomial::monomial(count as i64, maj) * &bracket).clone();
        out += &term;
    }
    Ok(out)
}

/// Wreath analogue: `q^{maj(T)}` against the q^r-binomial over the standard
/// Young r-tableaux of the given shape.
pub fn graded_mult_gf_wreath(
    n: usize,
    k: usize,
    r: usize,
    shape: &RPartition,
) -> Result<QPolynomial> {
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: n,
        });
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let mut out = QPolynomial::zero();
    for t in enumerate_r_syt_unbounded(shape) {
        let st = t.stats();
        let des = st.des_set.len();
        let bracket = q_binomial(n - des - 1, n - k).subst_power(r);
        let term = (&QPolynomial::monomial(1, st.maj) * &bracket).clone();
        out += &term;
    }
    Ok(out)
}

/// The graded Frobenius image of `R_{n,k}`: every shape's multiplicity
/// generating function.
pub fn grfrob(n: usize, k: usize) -> Result<BTreeMap<Partition, QPolynomial>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(n) {
        let gf = graded_mult_gf(n, k, &lambda)?;
        if !gf.is_zero() {
            out.insert(lambda, gf);
        }
    }
    Ok(out)
}

/// The graded Frobenius image of `S_{n,k}` over r-partitions.
pub fn grfrob_wreath(n: usize, k: usize, r: usize) -> Result<BTreeMap<RPartition, QPolynomial>> {
    let mut out = BTreeMap::new();
    for shape in RPartition::all_of(n, r) {
        let gf = graded_mult_gf_wreath(n, k, r, &shape)?;
        if !gf.is_zero() {
            out.insert(shape, gf);
        }
    }
    Ok(out)
}

/// All exponent partitions of `(n,k,r)`-descent monomials, grouped by size.
pub fn valid_rho_partitions(n: usize, k: usize, r: usize) -> Result<Vec<Partition>> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let mut out = Vec::new();
    for d in 0..=n * (r * k - 1) {
        for rho in partitions_of_bounded(d, n, r * k - 1) {
            if rho.classify(n, k, r)?.is_exponent_of_descent_monomial {
                out.push(rho);
            }
        }
    }
    Ok(out)
}

/// Number of standard Young tableaux of straight shape (by enumeration).
pub fn syt_count(lambda: &Partition) -> usize {
    enumerate_syt_unbounded(lambda).len()
}

/// Number of standard Young r-tableaux of the given shape.
pub fn r_syt_count(shape: &RPartition) -> usize {
    enumerate_r_syt_unbounded(shape).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rp(components: &[&[usize]]) -> RPartition {
        RPartition::new(
            components
                .iter()
                .map(|c| Partition::new(c.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multiplicity_rnk_worked_examples() {
        let rho = p(&[5, 3, 2, 2, 1, 1, 1]);
        assert_eq!(multiplicity_rnk(8, 6, &rho, &p(&[4, 3, 1])).unwrap(), 7);
        let rho = p(&[3, 2, 2, 1]);
        assert_eq!(multiplicity_rnk(5, 5, &rho, &p(&[2, 2, 1])).unwrap(), 1);
        // zero rho: only the one-row shape survives
        for lam in partitions_of(4) {
            let want = if lam == p(&[4]) { 1 } else { 0 };
            assert_eq!(
                multiplicity_rnk(4, 2, &Partition::empty(), &lam).unwrap(),
                want
            );
        }
        assert!(multiplicity_rnk(5, 2, &Partition::empty(), &p(&[2, 1])).is_err());
    }

    #[test]
    fn multiplicity_rnk_invalid_rho_vanishes() {
        // a part equal to k, or a non-descent tail, kills the component
        assert_eq!(multiplicity_rnk(3, 2, &p(&[2]), &p(&[3])).unwrap(), 0);
        assert_eq!(
            multiplicity_rnk(4, 3, &p(&[2, 2, 2, 2]), &p(&[4])).unwrap(),
            0
        );
        // tail jump of 2 within the last k positions
        assert_eq!(multiplicity_rnk(4, 4, &p(&[3, 1]), &p(&[4])).unwrap(), 0);
    }

    #[test]
    fn multiplicity_snk_worked_example_table() {
        let n = 7;
        let k = 5;
        let r = 2;
        let rho = p(&[9, 5, 5, 4, 3, 2, 0]);
        let ones = [
            rp(&[&[2, 1], &[4]]),
            rp(&[&[2, 1], &[2, 2]]),
            rp(&[&[2, 1], &[2, 1, 1]]),
            rp(&[&[1, 1, 1], &[4]]),
            rp(&[&[1, 1, 1], &[2, 2]]),
            rp(&[&[1, 1, 1], &[2, 1, 1]]),
        ];
        let twos = [rp(&[&[2, 1], &[3, 1]]), rp(&[&[1, 1, 1], &[3, 1]])];
        for shape in &ones {
            assert_eq!(multiplicity_snk(n, k, r, &rho, shape).unwrap(), 1);
        }
        for shape in &twos {
            assert_eq!(multiplicity_snk(n, k, r, &rho, shape).unwrap(), 2);
        }
        let table = frob_snk_rho(n, k, r, &rho).unwrap();
        assert_eq!(table.len(), 8);
        let total: usize = table.values().sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn multiplicity_snk_reduces_to_rnk_at_r_one() {
        for n in 1..=4usize {
            for k in 1..=n {
                for rho in valid_rho_partitions(n, k, 1).unwrap() {
                    for lam in partitions_of(n) {
                        let shape = RPartition::new(vec![lam.clone()]).unwrap();
                        assert_eq!(
                            multiplicity_snk(n, k, 1, &rho, &shape).unwrap(),
                            multiplicity_rnk(n, k, &rho, &lam).unwrap(),
                            "n={n} k={k} rho={rho} lam={lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frob_rnk_rho_tables() {
        let rho = p(&[5, 3, 2, 2, 1, 1, 1]);
        let table = frob_rnk_rho(8, 6, &rho).unwrap();
        assert_eq!(table.get(&p(&[4, 3, 1])), Some(&7));
        assert_eq!(
            frob_rnk_rho(4, 3, &Partition::empty()).unwrap(),
            BTreeMap::from([(p(&[4]), 1)])
        );
        let rho = p(&[3, 2, 2, 1]);
        let table = frob_rnk_rho(5, 5, &rho).unwrap();
        assert_eq!(table.get(&p(&[2, 2, 1])), Some(&1));
    }

    #[test]
    fn ribbon_data_example() {
        let rho = p(&[7, 7, 5, 3, 3, 3, 3, 2, 1, 1]);
        let data = ribbon_data(11, 8, &rho).unwrap();
        assert_eq!(data.gaps, vec![2, 1, 4, 1, 2]);
        assert_eq!(data.split, 2);
        assert_eq!(data.rows, vec![1, 2, 1, 4]);
        // no descents: a single full row
        let data = ribbon_data(5, 3, &Partition::empty()).unwrap();
        assert!(data.gaps.is_empty());
        assert_eq!(data.rows, vec![5]);
    }

    #[test]
    fn ribbon_product_matches_direct_frobenius_small() {
        for n in 1..=5usize {
            for k in 1..=n {
                for rho in valid_rho_partitions(n, k, 1).unwrap() {
                    let direct = SchurExpansion::from_counts(&frob_rnk_rho(n, k, &rho).unwrap());
                    let ribbon = frob_ribbon_product(n, k, &rho).unwrap();
                    assert_eq!(direct, ribbon, "n={n} k={k} rho={rho}");
                }
            }
        }
    }

    #[test]
    fn ribbon_product_worked_example_spot_coefficient() {
        // spot-check one coefficient of the eleven-variable ribbon product
        // against the direct constrained-descent count
        let rho = p(&[7, 7, 5, 3, 3, 3, 3, 2, 1, 1]);
        let exp = frob_ribbon_product(11, 8, &rho).unwrap();
        assert!(exp.is_nonnegative_integral());
        let lam = p(&[5, 4, 2]);
        let direct = crate::tableaux::count_syt_descents_between(
            &lam,
            &rho.descents_in_range(1, 4, 11).unwrap(),
            &rho.r_descents(1, 11).unwrap(),
        )
        .unwrap();
        assert!(direct > 0);
        assert_eq!(
            exp.coeff(&lam),
            BigRational::from_integer((direct as i64).into())
        );
    }

    #[test]
    fn omega_of_frobenius_is_conjugate_ribbon_with_elementaries() {
        for (n, k) in [(4usize, 3usize), (5, 3), (5, 5), (6, 4)] {
            for rho in valid_rho_partitions(n, k, 1).unwrap() {
                if rho.size() > 6 {
                    continue; // keep the unit test fast; sweeps cover the rest
                }
                let direct = SchurExpansion::from_counts(&frob_rnk_rho(n, k, &rho).unwrap());
                let omega_side = frob_ribbon_product_omega(n, k, &rho).unwrap();
                assert_eq!(direct.omega(), omega_side, "n={n} k={k} rho={rho}");
            }
        }
    }

    #[test]
    fn graded_gf_examples() {
        // n=3, k=2, lambda=(2,1): two tableaux, maj 1 and 2, bracket [1 1]_q = 1
        let gf = graded_mult_gf(3, 2, &p(&[2, 1])).unwrap();
        assert_eq!(gf.coeffs(), &[0, 1, 1]);
        // lambda=(n): single tableau, f = [n-1 choose n-k]_q
        assert_eq!(graded_mult_gf(5, 3, &p(&[5])).unwrap(), q_binomial(4, 2));
        // k=n: plain maj generating function
        let gf = graded_mult_gf(3, 3, &p(&[2, 1])).unwrap();
        assert_eq!(gf.coeffs(), &[0, 1, 1]);
    }

    #[test]
    fn graded_gf_matches_multiplicity_sum() {
        // sum over valid rho of multiplicity * q^{|rho|} equals the gf
        for n in 1..=5usize {
            for k in 1..=n {
                let rhos = valid_rho_partitions(n, k, 1).unwrap();
                for lam in partitions_of(n) {
                    let gf = graded_mult_gf(n, k, &lam).unwrap();
                    let mut sum = QPolynomial::zero();
                    for rho in &rhos {
                        let c = multiplicity_rnk(n, k, rho, &lam).unwrap();
                        sum += &QPolynomial::monomial(c as i64, rho.size());
                    }
                    assert_eq!(gf, sum, "n={n} k={k} lam={lam}");
                }
            }
        }
    }

    #[test]
    fn graded_gf_wreath_examples() {
        // r=1 reduces to the plain gf
        for k in 1..=4usize {
            for lam in partitions_of(4) {
                let shape = RPartition::new(vec![lam.clone()]).unwrap();
                assert_eq!(
                    graded_mult_gf_wreath(4, k, 1, &shape).unwrap(),
                    graded_mult_gf(4, k, &lam).unwrap()
                );
            }
        }
        // single row in component 0: bracket with q -> q^r
        let shape = rp(&[&[3], &[]]);
        assert_eq!(
            graded_mult_gf_wreath(3, 2, 2, &shape).unwrap(),
            q_binomial(2, 1).subst_power(2)
        );
    }

    #[test]
    fn graded_gf_wreath_matches_multiplicity_sum() {
        for n in 1..=3usize {
            for k in 1..=n {
                for r in 1..=2usize {
                    let rhos = valid_rho_partitions(n, k, r).unwrap();
                    for shape in RPartition::all_of(n, r) {
                        let gf = graded_mult_gf_wreath(n, k, r, &shape).unwrap();
                        let mut sum = QPolynomial::zero();
                        for rho in &rhos {
                            let c = multiplicity_snk(n, k, r, rho, &shape).unwrap();
                            sum += &QPolynomial::monomial(c as i64, rho.size());
                        }
                        assert_eq!(gf, sum, "n={n} k={k} r={r} shape={shape}");
                    }
                }
            }
        }
    }

    #[test]
    fn grfrob_small_and_chevalley() {
        let table = grfrob(3, 3).unwrap();
        assert_eq!(table.get(&p(&[3])).unwrap().coeffs(), &[1]);
        assert_eq!(table.get(&p(&[2, 1])).unwrap().coeffs(), &[0, 1, 1]);
        assert_eq!(table.get(&p(&[1, 1, 1])).unwrap().coeffs(), &[0, 0, 0, 1]);
        // q = 1 at k = n counts standard Young tableaux
        for n in 1..=5usize {
            let table = grfrob(n, n).unwrap();
            for lam in partitions_of(n) {
                assert_eq!(
                    table.get(&lam).map(|f| f.eval_one()).unwrap_or(0),
                    syt_count(&lam) as i64
                );
            }
        }
    }

    #[test]
    fn valid_rho_enumeration_matches_classify() {
        // k = n, r = 1: valid rho of size d are the descent partitions; the
        // count of all valid rho equals the number of distinct descent
        // monomial exponent partitions
        let rhos = valid_rho_partitions(3, 3, 1).unwrap();
        // descent monomials for n=3: exponent partitions { (), (1), (2,1), (1,1) x ... }
        let mut from_basis: std::collections::BTreeSet<Partition> =
            std::collections::BTreeSet::new();
        for e in crate::descent_monomials::enumerate_basis(3, 3, 1).unwrap() {
            from_basis.insert(crate::descent_monomials::exponent_partition(&e.monomial()));
        }
        let listed: std::collections::BTreeSet<Partition> = rhos.into_iter().collect();
        assert_eq!(listed, from_basis);
    }
}
