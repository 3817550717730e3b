//! The full chain, one object at a time: core partition → diagonal hooks →
//! planar ideal → greedy path → symmetric Dyck word, and back.
//!
//! Run with: cargo run --example bijection_walkthrough

use corelab::bijections::{core_to_path, delta, path_to_core, phi};
use corelab::limits::SearchLimit;
use corelab::oracle::enumerate_sc_cores;
use corelab::posets::{chi, format_half, sort_planar_ideal};

fn main() {
    let lim = SearchLimit::default();
    let (s, k) = (4u32, 4u32);
    let (m, kk) = (s / 2, k / 2);

    let (cores, _) = enumerate_sc_cores(s, k, &lim).unwrap();
    println!("self-conjugate ({s},…,{})-cores and their symmetric ({s},{k})-Dyck words:\n", s + k);
    for lambda in &cores {
        let md = lambda.diagonal_hooks().unwrap();
        let mut ideal: Vec<_> = md
            .values()
            .iter()
            .map(|&h| chi(s, k, h).unwrap())
            .collect();
        sort_planar_ideal(&mut ideal);
        let pretty: Vec<String> = ideal
            .iter()
            .map(|&(a2, b)| format!("({},{b})", format_half(a2)))
            .collect();
        let q_word = phi(m, kk, &ideal).unwrap();
        let sd = delta(m, kk, &q_word).unwrap();
        println!(
            "  {:<8} hooks {:?}  ideal {{{}}}  φ → \"{q_word}\"  δ → \"{sd}\"",
            lambda.to_string(),
            md.values(),
            pretty.join(",")
        );
        // the packaged composite agrees and inverts
        assert_eq!(core_to_path(s, k, lambda).unwrap(), sd);
        assert_eq!(&path_to_core(s, k, &sd).unwrap(), lambda);
    }

    // an odd/odd cell goes through the restricted ideals and η instead
    println!("\n(3, 4, 5, 6)-cores against symmetric (3,3)-Dyck words:");
    let (cores, _) = enumerate_sc_cores(3, 3, &lim).unwrap();
    for lambda in &cores {
        let word = core_to_path(3, 3, lambda).unwrap();
        println!("  {:<8} ↔ \"{word}\"", lambda.to_string());
    }
}
