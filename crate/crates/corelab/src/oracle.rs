//! Brute-force enumeration of self-conjugate (s, s+1, …, s+k)-cores.
//!
//! This is the independent side of every verification: it never touches the
//! posets or the bijections. It enumerates candidate diagonal-hook sets
//! directly from the arithmetic characterization of s-cores — a hook set is
//! a union of chains r, r+2s, r+2s·2, … over odd residues r, with at most
//! one residue picked from each pair {r, 2s−r} — and then keeps exactly the
//! candidates whose reconstructed partition passes the hook-grid core test
//! for every modulus in s..=s+k.
//!
//! Chains are capped at a configurable length. There is no a-priori bound on
//! how long a chain can get, so the public entry point runs the cap-stability
//! protocol: the cap is escalated until two consecutive caps produce the same
//! output, and a run that would need a cap beyond s fails loudly instead of
//! reporting a count.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits::SearchLimit;
use crate::partitions::{from_diagonal_hooks, OddHookSet, Partition};

/// Default chain cap: max(4, ⌈s/k⌉ + 2).
pub fn default_cap(s: u32, k: u32) -> u32 {
    4.max((s + k - 1) / k + 2)
}

/// All self-conjugate (s, …, s+k)-cores whose diagonal-hook chains have
/// length at most `cap`, canonically sorted.
pub fn enumerate_sc_cores_with_cap(
    s: u32,
    k: u32,
    cap: u32,
    limit: &SearchLimit,
) -> Result<Vec<Partition>> {
    if s < 2 || k < 1 || cap < 1 {
        return Err(Error::Parse(format!(
            "oracle needs s >= 2, k >= 1, cap >= 1, got s={s} k={k} cap={cap}"
        )));
    }
    let s64 = s as u64;
    let moduli: Vec<u64> = (s64..=s64 + k as u64).collect();
    // unordered residue pairs {r, 2s−r}; for odd s the self-paired r = s is
    // excluded because r + r = 2s is already forbidden
    let pairs: Vec<(u64, u64)> = (1..s64).step_by(2).map(|r| (r, 2 * s64 - r)).collect();
    let mut walk = Walk {
        s: s64,
        moduli,
        pairs,
        cap,
        limit,
        counter: 0,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    walk.rec(0)?;
    let mut out = walk.out;
    out.sort_by(|a, b| (a.size(), a.parts()).cmp(&(b.size(), b.parts())));
    for w in out.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Internal(format!(
                "oracle produced duplicate partition {}",
                w[0]
            )));
        }
    }
    Ok(out)
}

struct Walk<'a> {
    s: u64,
    moduli: Vec<u64>,
    pairs: Vec<(u64, u64)>,
    cap: u32,
    limit: &'a SearchLimit,
    counter: u64,
    chosen: Vec<u64>,
    out: Vec<Partition>,
}

impl Walk<'_> {
    /// Pair sums (repetition allowed) must avoid every multiple of 2t.
    fn clashes(&self, e: u64) -> bool {
        self.moduli.iter().any(|&t| {
            (2 * e) % (2 * t) == 0 || self.chosen.iter().any(|&x| (e + x) % (2 * t) == 0)
        })
    }

    fn rec(&mut self, pair_idx: usize) -> Result<()> {
        if pair_idx == self.pairs.len() {
            return self.finalize();
        }
        self.rec(pair_idx + 1)?;
        let (a, b) = self.pairs[pair_idx];
        for side in [a, b] {
            let mut pushed = 0usize;
            for c in 0..self.cap as u64 {
                let e = side + 2 * self.s * c;
                self.limit.tick(&mut self.counter, "oracle candidates")?;
                if self.clashes(e) {
                    break;
                }
                self.chosen.push(e);
                pushed += 1;
                self.rec(pair_idx + 1)?;
            }
            for _ in 0..pushed {
                self.chosen.pop();
            }
        }
        Ok(())
    }

    fn finalize(&mut self) -> Result<()> {
        self.limit.tick(&mut self.counter, "oracle candidates")?;
        // cheap prefilter: downward 2t-closure for the larger moduli
        let set: HashSet<u64> = self.chosen.iter().copied().collect();
        for &t in &self.moduli[1..] {
            for &h in &self.chosen {
                if h > 2 * t && !set.contains(&(h - 2 * t)) {
                    return Ok(());
                }
            }
        }
        let md = OddHookSet::new(self.chosen.iter().copied())
            .map_err(|e| Error::Internal(format!("oracle chain produced a bad hook set: {e}")))?;
        let lambda = from_diagonal_hooks(&md);
        if !lambda.is_self_conjugate() {
            return Err(Error::Internal(format!(
                "reconstructed partition {lambda} is not self-conjugate"
            )));
        }
        // the authoritative filter: hook-grid core checks for every modulus
        if lambda.is_simultaneous_core(&self.moduli)? {
            self.out.push(lambda);
        }
        Ok(())
    }
}

/// Cap-stable enumeration: escalates the cap until two consecutive caps
/// agree, failing loudly if that would push the cap past s. Returns the
/// partitions and the cap at which stability was reached.
pub fn enumerate_sc_cores(s: u32, k: u32, limit: &SearchLimit) -> Result<(Vec<Partition>, u32)> {
    let mut cap = default_cap(s, k);
    let mut cur = enumerate_sc_cores_with_cap(s, k, cap, limit)?;
    loop {
        let next = enumerate_sc_cores_with_cap(s, k, cap + 1, limit)?;
        if next == cur {
            return Ok((cur, cap));
        }
        if cap + 1 > s {
            return Err(Error::CapUnstable { s, cap, next: cap + 1 });
        }
        cur = next;
        cap += 1;
    }
}

fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow { what: "binomial", cap: u64::MAX })?
            / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow { what: "binomial", cap: u64::MAX })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Closed-form count of self-conjugate (s,t)-cores for coprime s, t:
/// C(⌊s/2⌋ + ⌊t/2⌋, ⌊s/2⌋).
pub fn fms_pair_count(s: u64, t: u64) -> Result<u64> {
    if gcd(s, t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    binomial(s / 2 + t / 2, s / 2)
}

/// Closed-form count of self-conjugate (s, s+1, s+2)-cores:
/// Σ_i C(⌊s/2⌋, i) · C(i, ⌊i/2⌋).
pub fn chs_count(s: u64) -> Result<u64> {
    let half = s / 2;
    let mut total = 0u64;
    for i in 0..=half {
        let term = binomial(half, i)?
            .checked_mul(binomial(i, i / 2)?)
            .ok_or(Error::Overflow { what: "chs count", cap: u64::MAX })?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow { what: "chs count", cap: u64::MAX })?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(list: &[&[u64]]) -> Vec<Partition> {
        list.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()
    }

    #[test]
    fn micro_enumerations() {
        let lim = SearchLimit::default();
        let got = enumerate_sc_cores_with_cap(4, 4, 4, &lim).unwrap();
        assert_eq!(got, parts(&[&[], &[1], &[2, 1], &[2, 2]]));
        let got = enumerate_sc_cores_with_cap(2, 3, 4, &lim).unwrap();
        assert_eq!(got, parts(&[&[], &[1]]));
        let got = enumerate_sc_cores_with_cap(3, 3, 4, &lim).unwrap();
        assert_eq!(got, parts(&[&[], &[1]]));
    }

    #[test]
    fn cap_stability_protocol() {
        let lim = SearchLimit::default();
        for (s, k) in [(4u32, 4u32), (6, 1), (7, 2), (8, 3)] {
            let (stable, cap) = enumerate_sc_cores(s, k, &lim).unwrap();
            let big = enumerate_sc_cores_with_cap(s, k, cap + 3, &lim).unwrap();
            assert_eq!(stable, big, "({s},{k})");
        }
    }

    #[test]
    fn oracle_soundness() {
        let lim = SearchLimit::default();
        for (s, k) in [(5u32, 2u32), (6, 3), (9, 1)] {
            let (cores, _) = enumerate_sc_cores(s, k, &lim).unwrap();
            let moduli: Vec<u64> = (s as u64..=(s + k) as u64).collect();
            for lam in &cores {
                assert!(lam.is_self_conjugate());
                assert!(lam.is_simultaneous_core(&moduli).unwrap());
            }
        }
    }

    #[test]
    fn fms_examples() {
        assert_eq!(fms_pair_count(4, 5).unwrap(), 6);
        assert_eq!(fms_pair_count(5, 6).unwrap(), 10);
        for t in [2u64, 5, 9] {
            assert_eq!(fms_pair_count(1, t).unwrap(), 1);
        }
        assert!(matches!(fms_pair_count(4, 6), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn chs_examples() {
        assert_eq!(chs_count(0).unwrap(), 1);
        assert_eq!(chs_count(4).unwrap(), 5);
        assert_eq!(chs_count(6).unwrap(), 13);
    }

    #[test]
    fn counts_match_closed_forms() {
        let lim = SearchLimit::default();
        for s in 2..=8u32 {
            let (cores, _) = enumerate_sc_cores(s, 1, &lim).unwrap();
            assert_eq!(
                cores.len() as u64,
                fms_pair_count(s as u64, s as u64 + 1).unwrap(),
                "k=1 count at s={s}"
            );
            let (cores, _) = enumerate_sc_cores(s, 2, &lim).unwrap();
            assert_eq!(cores.len() as u64, chs_count(s as u64).unwrap(), "k=2 count at s={s}");
        }
    }

    #[test]
    fn budget_is_honored() {
        let deadline = std::time::Instant::now() - std::time::Duration::from_secs(1);
        let lim = SearchLimit::with_deadline(deadline);
        // the deadline check fires every 1024 ticks, so use a cell big
        // enough to produce some candidates
        let err = enumerate_sc_cores_with_cap(12, 1, 12, &lim).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded), "{err}");
    }
}
