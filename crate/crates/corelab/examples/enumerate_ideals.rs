//! Order-ideal enumeration: all ideals, nice ideals, admissible ideals, and
//! the restricted family, with the χ correspondence between them.
//!
//! Run with: cargo run --example enumerate_ideals

use corelab::limits::SearchLimit;
use corelab::posets::{
    build_core_poset, chi, enumerate_admissible_ideals, enumerate_ideals, enumerate_nice_ideals,
    enumerate_restricted_ideals, is_nice, sort_planar_ideal,
};

fn main() {
    let lim = SearchLimit::default();
    let (s, k) = (6u32, 2u32);

    let poset = build_core_poset(s, k);
    let all = enumerate_ideals(&poset, &lim).unwrap();
    let nice = enumerate_nice_ideals(s, k, &lim).unwrap();
    println!("P({s},{k}): {} ideals, {} nice", all.len(), nice.len());
    for ideal in &nice {
        println!("  nice: {:?}", ideal.values());
    }

    // χ turns each nice ideal into an admissible planar ideal
    let admissible = enumerate_admissible_ideals(s, k, &lim).unwrap();
    println!("J(P'({s},{k})): {} admissible ideals", admissible.len());
    assert_eq!(nice.len(), admissible.len());
    for ideal in &nice {
        let mut image: Vec<_> = ideal
            .values()
            .iter()
            .map(|&h| chi(s, k, h).unwrap())
            .collect();
        sort_planar_ideal(&mut image);
        assert!(admissible.contains(&image));
    }
    println!("every χ image of a nice ideal is admissible");

    // a pair that sums into the forbidden window {2s, …, 2s+2k}
    println!("\nis_nice({s},{k}, {{1,11}}) = {}", is_nice(s, k, &[1, 11]));

    // the restricted family excludes ideals containing (m+1, 0)
    let (m, kk) = (2u32, 1u32);
    let restricted = enumerate_restricted_ideals(m, kk, &lim).unwrap();
    let smaller = enumerate_admissible_ideals(2 * m + 1, 2 * kk + 1, &lim).unwrap();
    println!(
        "\nJ*(P'({},{})) has {} ideals; J(P'({},{})) has {} — identical families",
        2 * m + 2,
        2 * kk + 1,
        restricted.len(),
        2 * m + 1,
        2 * kk + 1,
        smaller.len()
    );
}
