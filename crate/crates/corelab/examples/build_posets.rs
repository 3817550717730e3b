//! Building P(s,k) and P'(s,k) and emitting DOT for their Hasse diagrams.
//!
//! Run with: cargo run --example build_posets

use corelab::posets::{
    build_core_poset, build_planar_poset, chi, core_poset_dot, format_half, Side,
};

fn main() {
    let p = build_core_poset(20, 3);
    println!("P(20,3): {} elements", p.len());
    for side in [Side::Left, Side::Right] {
        let tag = if side == Side::Left { "L" } else { "R" };
        for rank in 0..4u32 {
            let row: Vec<u64> = p
                .elements()
                .iter()
                .copied()
                .filter(|&x| p.rank_of(x) == Some(rank) && p.side_of(x) == Some(side))
                .collect();
            if !row.is_empty() {
                println!("  {tag} rank {rank}: {row:?}");
            }
        }
    }

    println!("\nχ sends each odd element to a planar point (x stored doubled):");
    for x in [1u64, 49, 25, 139] {
        let (a2, b) = chi(20, 3, x).or_else(|_| chi(20, 4, x)).unwrap();
        println!("  χ({x}) = ({}, {b})", format_half(a2));
    }

    let q = build_planar_poset(4, 4);
    println!("\nP'(4,4) elements: {:?} (an antichain)", q.elements());

    println!("\nDOT for P(4,4):\n{}", core_poset_dot(&build_core_poset(4, 4)));
    println!("Pipe `corelab hasse --s 20 --k 3 --which p-prime` into graphviz for the big ones.");
}
