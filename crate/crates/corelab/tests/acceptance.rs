//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every tolerance here is exact — the identities under test are integer
//! count equalities and word-for-word round trips.

use std::collections::BTreeSet;
use std::time::Duration;

use corelab::bijections::{core_to_path, xi, xi_inv};
use corelab::harness::{
    golden_suite, run_sweep, verify_roundtrips, verify_structure, Suite, SweepConfig,
};
use corelab::limits::SearchLimit;
use corelab::oracle::{chs_count, enumerate_sc_cores, fms_pair_count};
use corelab::partitions::{OddHookSet, Partition};
use corelab::paths::{
    count, count_symmetric_dyck, enumerate_symmetric_dyck, motzkin, parse_word, FamilySpec,
};
use corelab::posets::{
    build_planar_poset, count_nice_ideals, enumerate_admissible_ideals, enumerate_nice_ideals,
    enumerate_restricted_ideals, left_contains, posets_equal, right_contains, sort_planar_ideal,
};

fn pass(criterion: u32, what: &str) {
    println!("[PASS] criterion {criterion}: {what}");
}

/// Criterion 1: the four counts agree on every cell 2 ≤ s ≤ 12, 1 ≤ k ≤ 5
/// within a 60 s/cell budget, and unconditionally for s ≤ 10.
#[test]
fn criterion_1_equinumerosity_sweep() {
    let cfg = SweepConfig {
        s_range: (2, 12),
        k_range: (1, 5),
        budget: Duration::from_secs(60),
        suites: vec![Suite::Equinumerosity],
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let report = run_sweep(&cfg);
    assert_eq!(report.cells.len(), 11 * 5);
    for cell in &report.cells {
        if cell.s <= 10 {
            assert!(
                !cell.skipped && cell.pass(),
                "cell ({},{}) must pass unconditionally: {:?}",
                cell.s,
                cell.k,
                cell.suites
            );
        } else {
            assert!(
                cell.pass() || cell.skipped,
                "cell ({},{}) failed inside its budget: {:?}",
                cell.s,
                cell.k,
                cell.suites
            );
        }
        if let Some(c) = cell.counts {
            assert!(c.all_equal(), "counts differ at ({},{}): {c:?}", cell.s, cell.k);
        }
    }
    let done = report.cells.iter().filter(|c| !c.skipped).count();
    pass(1, &format!("four-way count agreement on {done}/55 cells (none failed)"));
}

/// Criterion 2: the set of diagonal-hook sets of the oracle's cores equals
/// the set of nice ideals, element for element, for s ≤ 10, k ≤ 4.
#[test]
fn criterion_2_hook_sets_equal_nice_ideals() {
    let lim = SearchLimit::default();
    let mut cells = 0;
    for s in 2..=10u32 {
        for k in 1..=4u32 {
            let (cores, _) = enumerate_sc_cores(s, k, &lim).unwrap();
            let md: BTreeSet<OddHookSet> = cores
                .iter()
                .map(|c| c.diagonal_hooks().unwrap())
                .collect();
            let nice: BTreeSet<OddHookSet> =
                enumerate_nice_ideals(s, k, &lim).unwrap().into_iter().collect();
            assert_eq!(md, nice, "hook sets vs nice ideals at ({s},{k})");
            cells += 1;
        }
    }
    pass(2, &format!("hook-set / nice-ideal set equality on {cells} cells"));
}

/// Criterion 3: the micro cells (4,4), (2,3), (3,3) produce exactly the
/// listed partitions and words, with the listed pairing.
#[test]
fn criterion_3_micro_golden_fixtures() {
    let lim = SearchLimit::default();

    let pairs_44 = [
        (vec![], "H1 H2 H1"),
        (vec![1u64], "U D"),
        (vec![2, 1], "H2 H2"),
        (vec![2, 2], "H1 H1 H1 H1"),
    ];
    let (cores, _) = enumerate_sc_cores(4, 4, &lim).unwrap();
    assert_eq!(
        cores,
        pairs_44
            .iter()
            .map(|(p, _)| Partition::new(p.clone()).unwrap())
            .collect::<Vec<_>>()
    );
    let words: BTreeSet<String> = enumerate_symmetric_dyck(4, 4, &lim)
        .unwrap()
        .iter()
        .map(|w| w.to_token_string())
        .collect();
    assert_eq!(
        words,
        pairs_44.iter().map(|(_, w)| w.to_string()).collect::<BTreeSet<_>>()
    );
    for (parts, word) in &pairs_44 {
        let lam = Partition::new(parts.clone()).unwrap();
        assert_eq!(core_to_path(4, 4, &lam).unwrap(), parse_word(word, 4).unwrap());
    }

    for (s, k, expect) in [(2u32, 3u32, vec!["H1 H1", "H2"]), (3, 3, vec!["H1 H1 H1", "U D"])] {
        let (cores, _) = enumerate_sc_cores(s, k, &lim).unwrap();
        assert_eq!(cores.len(), 2, "({s},{k})");
        let words: BTreeSet<String> = enumerate_symmetric_dyck(s, k, &lim)
            .unwrap()
            .iter()
            .map(|w| w.to_token_string())
            .collect();
        assert_eq!(words, expect.iter().map(|w| w.to_string()).collect::<BTreeSet<_>>());
    }
    pass(3, "micro fixtures at (4,4), (2,3), (3,3)");
}

/// Criterion 4: the printed worked examples — hook grid, poset labels, and
/// the φ/ψ/α/β words — are reproduced exactly.
#[test]
fn criterion_4_figure_goldens() {
    let outcome = golden_suite();
    assert!(outcome.pass, "golden fixtures failed:\n{}", outcome.detail);
    let lines = outcome.detail.lines().count();
    pass(4, &format!("{lines} golden fixtures reproduced exactly"));
}

/// Criterion 5: every bijection round-trips on 100% of its enumerated
/// domain and codomain for s ≤ 10, k ≤ 4.
#[test]
fn criterion_5_round_trip_suites() {
    let lim = SearchLimit::default();
    let mut total = 0u64;
    for s in 2..=10u32 {
        for k in 1..=4u32 {
            let outcome = verify_roundtrips(s, k, &lim).unwrap();
            assert!(outcome.pass, "({s},{k}): {}", outcome.detail);
            let n: u64 = outcome
                .detail
                .split_whitespace()
                .next()
                .and_then(|w| w.parse().ok())
                .unwrap_or(0);
            total += n;
        }
    }
    pass(5, &format!("{total} exact round trips across 36 cells"));
}

/// Criterion 6: formula cross-checks — the k=1 column is the central
/// binomial, the k=2 column is the symmetric-Motzkin sum (s ≤ 14), and
/// (s,2)-Dyck words are counted by the Motzkin recurrence (s ≤ 14).
#[test]
fn criterion_6_formula_cross_checks() {
    let lim = SearchLimit::default();
    for s in 2..=10u32 {
        let expect = fms_pair_count(s as u64, s as u64 + 1).unwrap();
        let (cores, _) = enumerate_sc_cores(s, 1, &lim).unwrap();
        assert_eq!(cores.len() as u64, expect, "oracle k=1 at s={s}");
        assert_eq!(count_nice_ideals(s, 1, &lim).unwrap(), expect, "ideals k=1 at s={s}");
        assert_eq!(count_symmetric_dyck(s, 1, &lim).unwrap(), expect, "words k=1 at s={s}");
    }
    assert_eq!(chs_count(4).unwrap(), 5);
    assert_eq!(chs_count(6).unwrap(), 13);
    for s in 2..=14u32 {
        let expect = chs_count(s as u64).unwrap();
        let (cores, _) = enumerate_sc_cores(s, 2, &lim).unwrap();
        assert_eq!(cores.len() as u64, expect, "oracle k=2 at s={s}");
        assert_eq!(count_nice_ideals(s, 2, &lim).unwrap(), expect, "ideals k=2 at s={s}");
        assert_eq!(count_symmetric_dyck(s, 2, &lim).unwrap(), expect, "words k=2 at s={s}");
    }
    assert_eq!(motzkin(4).unwrap(), 9);
    for s in 0..=14u32 {
        assert_eq!(
            count(&FamilySpec::dyck(2 * s as i64, 2), &lim).unwrap(),
            motzkin(s as usize).unwrap(),
            "Dyck(s,2) vs Motzkin at s={s}"
        );
    }
    pass(6, "central binomial (s ≤ 10), symmetric-Motzkin and Motzkin checks (s ≤ 14)");
}

/// Criterion 7: structural identities — the poset identity, the
/// restricted-ideal identity, membership closure, niceness transport, and
/// the ξ width bump — all exact.
#[test]
fn criterion_7_structural_identities() {
    let lim = SearchLimit::default();
    for m in 1..=8u32 {
        for k in 1..=4u32 {
            assert!(
                posets_equal(&build_planar_poset(2 * m, 2 * k), &build_planar_poset(2 * m + 1, 2 * k)),
                "poset identity at m={m}, k={k}"
            );
        }
    }
    for m in 1..=5u32 {
        for k in 1..=3u32 {
            let mut restricted = enumerate_restricted_ideals(m, k, &lim).unwrap();
            let mut small = enumerate_admissible_ideals(2 * m + 1, 2 * k + 1, &lim).unwrap();
            for v in restricted.iter_mut().chain(small.iter_mut()) {
                sort_planar_ideal(v);
            }
            let restricted: BTreeSet<_> = restricted.into_iter().collect();
            let small: BTreeSet<_> = small.into_iter().collect();
            assert_eq!(restricted, small, "restricted-ideal identity at m={m}, k={k}");
        }
    }
    // membership closure over the stated x-range
    for s in 2..=20u32 {
        for k in 1..=5u32 {
            let poset = corelab::posets::build_core_poset(s, k);
            let max =
                poset.elements().iter().max().copied().unwrap_or(1) + 2 * (s + k) as u64;
            for x in (2 * s as u64 + 1..=max).step_by(2) {
                let all_l =
                    (s..=s + k).all(|t| x > 2 * t as u64 && left_contains(s, k, x - 2 * t as u64));
                let all_r =
                    (s..=s + k).all(|t| x > 2 * t as u64 && right_contains(s, k, x - 2 * t as u64));
                assert_eq!(left_contains(s, k, x), all_l, "L closure s={s} k={k} x={x}");
                assert_eq!(right_contains(s, k, x), all_r, "R closure s={s} k={k} x={x}");
            }
        }
    }
    // niceness transport for every ideal (inside verify_structure), s ≤ 14
    for s in 2..=14u32 {
        for k in 1..=5u32 {
            let outcome = verify_structure(s, k, &lim).unwrap();
            assert!(outcome.pass, "structure at ({s},{k}): {}", outcome.detail);
        }
    }
    // ξ gives |SD(2m,2k)| = |SD(2m+1,2k)| bijectively
    for m in 1..=5u32 {
        for k in 1..=3u32 {
            let even = enumerate_symmetric_dyck(2 * m, 2 * k, &lim).unwrap();
            let odd = enumerate_symmetric_dyck(2 * m + 1, 2 * k, &lim).unwrap();
            assert_eq!(even.len(), odd.len(), "xi counts at m={m}, k={k}");
            let images: BTreeSet<String> = even
                .iter()
                .map(|w| xi(w).unwrap().to_token_string())
                .collect();
            assert_eq!(images.len(), odd.len());
            for w in &odd {
                assert!(images.contains(&w.to_token_string()));
                assert_eq!(xi(&xi_inv(w).unwrap()).unwrap(), *w);
            }
        }
    }
    pass(7, "poset identity, restricted ideals, closure, transport, and width bump");
}

/// Criterion 8: every oracle run reaches cap stability, and instability past
/// cap = s is a loud error, not a count.
#[test]
fn criterion_8_oracle_cap_stability() {
    let lim = SearchLimit::default();
    let mut runs = 0;
    for s in 2..=12u32 {
        for k in 1..=5u32 {
            let (stable, cap) = enumerate_sc_cores(s, k, &lim).unwrap();
            assert!(cap <= s.max(corelab::oracle::default_cap(s, k)));
            // stability means the next cap changes nothing
            let next = corelab::oracle::enumerate_sc_cores_with_cap(s, k, cap + 1, &lim).unwrap();
            assert_eq!(stable, next, "cap stability at ({s},{k})");
            runs += 1;
        }
    }
    pass(8, &format!("cap stability on {runs} oracle runs"));
}
