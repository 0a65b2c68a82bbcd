//! The brute-force oracle: build a quotient explicitly by row reduction,
//! decompose a refined component with exact character arithmetic, and sweep
//! the closed-form counts against it.
//!
//! Run with: `cargo run --release --example oracle_crosscheck`

use coinv::combinatorics::Partition;
use coinv::oracle::{verify_multiplicity_rule, CharacterTable, GradedQuotient};

fn main() {
    let (n, k, r) = (4, 3, 2);
    let quotient = GradedQuotient::build(n, k, r, None).unwrap();
    println!(
        "S_{{{n},{k}}} at r = {r}: hilbert = {}, total dimension {}",
        quotient.hilbert(),
        quotient.total_dim()
    );

    let table = CharacterTable::build(n, r).unwrap();
    table.check_orthogonality().unwrap();
    println!(
        "character table of G({r},1,{n}): {} classes, orthogonality exact",
        table.classes.len()
    );
    println!();

    let rho = Partition::new(vec![3, 2, 1]).unwrap();
    let comp = quotient.refined_component(&rho).unwrap();
    println!("component at rho = {rho}: dimension {}", comp.dim());
    for (shape, mult) in quotient.decompose(&comp, &table).unwrap() {
        println!("  {shape:>16}  {mult}");
    }
    println!();

    let report = verify_multiplicity_rule(n, k, r).unwrap();
    println!(
        "sweep of every graded component: {} checked, mismatches: {}",
        report.components_checked,
        report.mismatches.len()
    );
}
