//! Graded multiplicity generating functions: each shape's multiplicities
//! across the graded pieces of `R_{n,k}` (and the wreath analogue for
//! `S_{n,k}`), packaged as polynomials in q via the major-index and
//! q-binomial formula.
//!
//! Run with: `cargo run --example graded_generating_functions`

use coinv::combinatorics::{Partition, RPartition};
use coinv::representations::{graded_mult_gf_wreath, grfrob, syt_count};

fn main() {
    let n = 4;
    let k = 3;
    println!("graded Frobenius image of R_{{{n},{k}}}:");
    for (shape, gf) in grfrob(n, k).unwrap() {
        println!("  {shape:>10}  {gf}");
    }
    println!();

    // at k = n, evaluating at q = 1 recovers the tableau counts
    let table = grfrob(n, n).unwrap();
    println!("k = n and q = 1 recovers the number of standard tableaux:");
    for (shape, gf) in &table {
        println!(
            "  {shape:>10}  {} (tableaux: {})",
            gf.eval_one(),
            syt_count(shape)
        );
    }
    println!();

    let shape = RPartition::new(vec![
        Partition::new(vec![2]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    ])
    .unwrap();
    let gf = graded_mult_gf_wreath(3, 2, 2, &shape).unwrap();
    println!("wreath case n=3, k=2, r=2, shape {shape}: {gf}");
}
