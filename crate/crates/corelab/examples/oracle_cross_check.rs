//! The brute-force oracle: cap-stable enumeration plus the closed-form
//! count checks it is measured against.
//!
//! Run with: cargo run --example oracle_cross_check

use corelab::limits::SearchLimit;
use corelab::oracle::{chs_count, default_cap, enumerate_sc_cores, fms_pair_count};

fn main() {
    let lim = SearchLimit::default();

    let (cores, cap) = enumerate_sc_cores(6, 3, &lim).unwrap();
    println!(
        "self-conjugate (6,7,8,9)-cores (default cap {}, stable at {cap}):",
        default_cap(6, 3)
    );
    for lambda in &cores {
        println!("  {lambda}");
    }

    println!("\nk = 1 column vs the pair-count binomial:");
    for s in 2..=10u32 {
        let (cores, _) = enumerate_sc_cores(s, 1, &lim).unwrap();
        let formula = fms_pair_count(s as u64, s as u64 + 1).unwrap();
        println!("  s = {s:>2}: oracle {:>4}, formula {formula:>4}", cores.len());
        assert_eq!(cores.len() as u64, formula);
    }

    println!("\nk = 2 column vs the symmetric-Motzkin sum:");
    for s in 2..=12u32 {
        let (cores, _) = enumerate_sc_cores(s, 2, &lim).unwrap();
        let formula = chs_count(s as u64).unwrap();
        println!("  s = {s:>2}: oracle {:>4}, formula {formula:>4}", cores.len());
        assert_eq!(cores.len() as u64, formula);
    }
}
