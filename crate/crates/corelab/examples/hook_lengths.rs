//! Partitions, hook grids, core predicates, and the diagonal-hook set.
//!
//! Run with: cargo run --example hook_lengths

use corelab::partitions::{from_diagonal_hooks, OddHookSet, Partition};

fn main() {
    let lambda = Partition::new(vec![5, 3, 3, 1, 1]).unwrap();
    println!("λ = {lambda}, |λ| = {}", lambda.size());
    println!("self-conjugate: {}", lambda.is_self_conjugate());

    println!("\nhook lengths:");
    for row in lambda.hook_grid().rows() {
        let cells: Vec<String> = row.iter().map(|h| format!("{h:>2}")).collect();
        println!("  {}", cells.join(" "));
    }

    let md = lambda.diagonal_hooks().unwrap();
    println!("\ndiagonal hooks: {:?} (sum {})", md.values(), md.sum());

    for t in 2..=9u64 {
        println!("{t}-core: {}", lambda.is_t_core(t).unwrap());
    }
    println!(
        "(4,5,6,7,8)-core: {}",
        lambda.is_simultaneous_core(&[4, 5, 6, 7, 8]).unwrap()
    );

    // a partition is recoverable from its diagonal hooks
    let rebuilt = from_diagonal_hooks(&OddHookSet::new([9, 3, 1]).unwrap());
    println!("\nfrom_diagonal_hooks({{9,3,1}}) = {rebuilt}");
    assert_eq!(rebuilt, lambda);
}
