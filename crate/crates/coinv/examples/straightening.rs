//! The straightening algorithm: any monomial with exponents below rk
//! expands exactly over the basis of descent monomials times elementary
//! symmetric factors, and dropping the elementary factors projects onto
//! the quotient.
//!
//! Run with: `cargo run --example straightening`

use coinv::descent_monomials::{
    complementary_partition, exponent_partition, index_permutation, project_to_quotient,
    straighten_full, Monomial,
};

fn main() {
    let n = 8;
    let k = 7;
    let m = Monomial::parse("x1^6*x2*x3*x4^2*x6^4*x7*x8^2", n).unwrap();

    println!("monomial m = {m}");
    println!("index permutation: {}", index_permutation(&m));
    println!("exponent partition: {}", exponent_partition(&m));
    println!(
        "complementary partition: {}",
        complementary_partition(&m, 1)
    );
    println!();

    println!("straightening over the descent basis at k = {k}:");
    for (element, coeff) in straighten_full(&m, k, 1).unwrap() {
        println!(
            "  {coeff:>3} * b[{}] I={:?} nu={}",
            element.monomial(),
            element.i_seq(),
            element.nu()
        );
    }
    println!();

    println!("projection to the quotient (e-factor terms dropped):");
    let projection = project_to_quotient(&m, k, 1).unwrap();
    if projection.is_empty() {
        println!("  zero in the quotient");
    }
    for (element, coeff) in projection {
        println!("  {coeff:>3} * b[{}]", element.monomial());
    }
}
