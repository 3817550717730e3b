//! Path families: enumeration, symmetry, and the classical count checks.
//!
//! Run with: cargo run --example enumerate_paths

use corelab::limits::SearchLimit;
use corelab::paths::{
    count, count_symmetric_dyck, enumerate_symmetric_dyck, motzkin, parse_word, FamilySpec,
};

fn main() {
    let lim = SearchLimit::default();

    println!("symmetric (4,4)-Dyck words:");
    for word in enumerate_symmetric_dyck(4, 4, &lim).unwrap() {
        println!("  {word}    (width {} half-units)", word.width_hu());
    }

    // a word is symmetric exactly when it equals its reverse complement
    let w = parse_word("U H2 H2 H2 D", 4).unwrap();
    println!("\n{w}  rc = {}  symmetric: {}", w.reverse_complement(), w.is_symmetric());

    // (s,2)-Dyck words are Motzkin paths
    print!("\nDyck(s,2) counts:");
    for s in 0..=10u32 {
        let c = count(&FamilySpec::dyck(2 * s as i64, 2), &lim).unwrap();
        assert_eq!(c, motzkin(s as usize).unwrap());
        print!(" {c}");
    }
    println!("  — the Motzkin numbers");

    // symmetric (s,1)-Dyck words are counted by the central binomial
    print!("SD(s,1) counts:     ");
    for s in 1..=10u32 {
        print!(" {}", count_symmetric_dyck(s, 1, &lim).unwrap());
    }
    println!("  — C(s, floor(s/2))");
}
