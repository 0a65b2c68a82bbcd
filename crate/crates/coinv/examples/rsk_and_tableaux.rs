//! The RSK correspondence and tableau descent statistics that drive the
//! multiplicity formulas.
//!
//! Run with: `cargo run --example rsk_and_tableaux`

use std::collections::BTreeSet;

use coinv::combinatorics::Partition;
use coinv::tableaux::{count_syt_descents_between, enumerate_syt, rsk, rsk_inverse, Word};

fn main() {
    let w = Word(vec![3, 4, 1, 2, 5, 5, 5, 3, 1, 3, 2]);
    let (insertion, recording) = rsk(&w);
    println!("word w = {w}");
    println!("P = {insertion}");
    println!("Q = {recording}");
    println!("shape = {}", recording.shape());
    println!(
        "descents of Q match descents of w: {:?}",
        recording.descent_set()
    );
    let back = rsk_inverse(&insertion, &recording).unwrap();
    println!("inverse recovers the word: {}", back == w);
    println!();

    let lambda = Partition::new(vec![4, 3, 1]).unwrap();
    let all = enumerate_syt(&lambda).unwrap();
    println!("SYT({lambda}): {} tableaux", all.len());
    let lo = BTreeSet::from([4, 7]);
    let hi = BTreeSet::from([1, 2, 4, 7]);
    let count = count_syt_descents_between(&lambda, &lo, &hi).unwrap();
    println!("with {lo:?} inside Des(T) inside {hi:?}: {count}");
    for t in all.iter().filter(|t| {
        let des = t.descent_set();
        lo.is_subset(&des) && des.is_subset(&hi)
    }) {
        println!("  {t}   Des = {:?}", t.descent_set());
    }
}
