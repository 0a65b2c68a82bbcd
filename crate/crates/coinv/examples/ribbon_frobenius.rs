//! The ribbon rewriting of a refined component's Frobenius image: the
//! descent gaps of the exponent partition split into homogeneous factors
//! and one skew ribbon Schur polynomial, and the product expands to exactly
//! the tableau-counting multiplicities.
//!
//! Run with: `cargo run --release --example ribbon_frobenius`

use coinv::combinatorics::Partition;
use coinv::representations::{frob_ribbon_product, frob_rnk_rho, ribbon_data};
use coinv::symfunc::SchurExpansion;

fn main() {
    let n = 11;
    let k = 8;
    let rho = Partition::new(vec![7, 7, 5, 3, 3, 3, 3, 2, 1, 1]).unwrap();

    let data = ribbon_data(n, k, &rho).unwrap();
    println!("rho = {rho}, descents {:?}", rho.r_descents(1, n).unwrap());
    println!("descent gaps d = {:?}", data.gaps);
    println!("gaps before the tail window: {}", data.split);
    println!("ribbon rows (top to bottom): {:?}", data.rows);
    println!();

    let ribbon = frob_ribbon_product(n, k, &rho).unwrap();
    let direct = SchurExpansion::from_counts(&frob_rnk_rho(n, k, &rho).unwrap());
    println!(
        "ribbon-product expansion ({} shapes):",
        ribbon.terms().len()
    );
    for (shape, coeff) in ribbon.terms() {
        println!("  {shape:>18}  {coeff}");
    }
    println!();
    println!("tableau-counting expansion agrees: {}", ribbon == direct);

    // the omega involution sends the h-factors to e-factors and conjugates
    // every shape
    let conjugated = direct.omega();
    println!(
        "omega of the image has {} shapes, top one {:?}",
        conjugated.terms().len(),
        conjugated.terms().keys().next_back().unwrap()
    );
}
