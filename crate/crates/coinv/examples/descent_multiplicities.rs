//! Multiplicities of irreducibles in a refined component of the generalized
//! coinvariant algebra `R_{n,k}`, computed by counting standard Young
//! tableaux with constrained descent sets.
//!
//! Run with: `cargo run --example descent_multiplicities`

use coinv::combinatorics::Partition;
use coinv::representations::{frob_rnk_rho, multiplicity_rnk};

fn main() {
    let n = 8;
    let k = 6;
    let rho = Partition::new(vec![5, 3, 2, 2, 1, 1, 1]).unwrap();

    println!("component R_{{{n},{k},rho}} with rho = {rho}");
    println!(
        "descents of rho: {:?}, tail window [{}..{}] gives {:?}",
        rho.r_descents(1, n).unwrap(),
        n - k + 1,
        n,
        rho.descents_in_range(1, n - k + 1, n).unwrap()
    );
    println!();

    let lambda = Partition::new(vec![4, 3, 1]).unwrap();
    let m = multiplicity_rnk(n, k, &rho, &lambda).unwrap();
    println!("multiplicity of the shape {lambda} irreducible: {m}");
    println!();

    println!("full multiplicity table (nonzero entries):");
    for (shape, mult) in frob_rnk_rho(n, k, &rho).unwrap() {
        println!("  {shape:>14}  {mult}");
    }

    // an invalid exponent partition kills the whole component
    let bad = Partition::new(vec![6, 3, 2, 2, 1, 1, 1]).unwrap();
    println!();
    println!(
        "rho = {bad} has a part of size k = {k}, so the component vanishes: {}",
        frob_rnk_rho(n, k, &bad).unwrap().is_empty()
    );
}
