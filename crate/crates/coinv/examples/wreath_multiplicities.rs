//! The wreath-product analogue: multiplicities of `G(r,1,n)` irreducibles
//! in a refined component of `S_{n,k}`, by counting standard Young
//! r-tableaux with constrained descents and colors.
//!
//! Run with: `cargo run --example wreath_multiplicities`

use coinv::combinatorics::Partition;
use coinv::representations::frob_snk_rho;

fn main() {
    let n = 7;
    let k = 5;
    let r = 2;
    let rho = Partition::new(vec![9, 5, 5, 4, 3, 2, 0]).unwrap();

    println!("component S_{{{n},{k},rho}} at r = {r} with rho = {rho}");
    println!(
        "r-descents of rho: {:?}; colors are the residues {:?}",
        rho.r_descents(r, n).unwrap(),
        (1..=n).map(|i| rho.part(i) % r).collect::<Vec<_>>()
    );
    println!();

    println!("multiplicity table over 2-partitions (nonzero entries):");
    for (shape, mult) in frob_snk_rho(n, k, r, &rho).unwrap() {
        println!("  {shape:>22}  {mult}");
    }
}
