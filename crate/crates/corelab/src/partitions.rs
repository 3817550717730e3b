//! Integer partitions, Young diagrams, hook lengths, and the diagonal-hook
//! correspondence for self-conjugate partitions.
//!
//! A self-conjugate partition is determined by its set of main-diagonal hook
//! lengths, which is always a set of distinct odd positive integers. That set
//! is the handle everything else in this crate grabs: core predicates,
//! poset ideals, and the path bijections all speak diagonal hooks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<u64>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;
    fn try_from(r: PartitionRepr) -> Result<Self> {
        Partition::new(r.parts)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { parts: p.parts }
    }
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The conjugate partition λ′ with λ′_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols as u64 {
            t.push(self.parts.iter().take_while(|&&p| p >= j).count() as u64);
        }
        Partition { parts: t }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length of box (i, j), both 0-based. Box must be in the diagram.
    fn hook(&self, conj: &Partition, i: usize, j: usize) -> u64 {
        // λ_i − j + λ′_j − i − 1, with the two 1-based shifts folded in
        self.parts[i] - j as u64 + conj.parts[j] - i as u64 - 1
    }

    /// The full grid of hook lengths, row by row.
    pub fn hook_grid(&self) -> HookGrid {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len as usize).map(|j| self.hook(&conj, i, j)).collect())
            .collect();
        HookGrid { rows }
    }

    /// True iff no hook length is divisible by `t`.
    pub fn is_t_core(&self, t: u64) -> Result<bool> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        let conj = self.conjugate();
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] as usize {
                if self.hook(&conj, i, j) % t == 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Simultaneous core: t-core for every listed t.
    pub fn is_simultaneous_core(&self, ts: &[u64]) -> Result<bool> {
        for &t in ts {
            if !self.is_t_core(t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Main-diagonal hook lengths. Defined here only for self-conjugate
    /// input, where the values are guaranteed distinct and odd.
    pub fn diagonal_hooks(&self) -> Result<OddHookSet> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate);
        }
        let conj = self.conjugate();
        let d = (0..self.parts.len())
            .take_while(|&i| self.parts[i] > i as u64)
            .map(|i| self.hook(&conj, i, i))
            .collect::<Vec<_>>();
        OddHookSet::new(d)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Hook lengths of every box, in diagram shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<u64>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// All hook lengths in row-major order.
    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flatten().copied()
    }
}

/// A finite set of distinct positive odd integers, kept sorted descending.
///
/// Serializes as a bare descending array, e.g. `[9,3,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct OddHookSet {
    values: Vec<u64>,
}

impl TryFrom<Vec<u64>> for OddHookSet {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        OddHookSet::new(v)
    }
}

impl From<OddHookSet> for Vec<u64> {
    fn from(s: OddHookSet) -> Self {
        s.values
    }
}

impl OddHookSet {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut values: Vec<u64> = values.into_iter().collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        for w in values.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidHookSet(format!("repeated value {}", w[0])));
            }
        }
        if let Some(&bad) = values.iter().find(|&&v| v == 0 || v % 2 == 0) {
            return Err(Error::InvalidHookSet(format!("{bad} is not a positive odd integer")));
        }
        Ok(Self { values })
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    /// Values in descending order.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.values.contains(&v)
    }
}

/// The unique self-conjugate partition whose diagonal hooks are `set`.
///
/// With h_1 > … > h_r and arm lengths a_i = (h_i − 1)/2, row i of the result
/// is a_i + i inside the Durfee square and the column counts of the arms
/// below it.
pub fn from_diagonal_hooks(set: &OddHookSet) -> Partition {
    let arms: Vec<u64> = set.values().iter().map(|&h| (h - 1) / 2).collect();
    let r = arms.len() as u64;
    let mut parts = Vec::new();
    for (i, &a) in arms.iter().enumerate() {
        parts.push(a + i as u64 + 1);
    }
    let mut i = r + 1;
    loop {
        let row = arms
            .iter()
            .enumerate()
            .filter(|&(j, &a)| a + j as u64 + 1 >= i)
            .count() as u64;
        if row == 0 {
            break;
        }
        parts.push(row);
        i += 1;
    }
    Partition { parts }
}

/// All partitions of `n`, in descending lexicographic order of part lists.
pub fn all_partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(remaining: u64, max_part: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n.max(1), &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 3, 3, 1, 1]).conjugate(), p(&[5, 3, 3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn hook_grid_examples() {
        let g = p(&[5, 3, 3, 1, 1]).hook_grid();
        assert_eq!(
            g.rows(),
            &[vec![9, 6, 5, 2, 1], vec![6, 3, 2], vec![5, 2, 1], vec![2], vec![1]]
        );
        assert!(Partition::empty().hook_grid().rows().is_empty());
        assert_eq!(p(&[2, 2]).hook_grid().rows(), &[vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn t_core_examples() {
        let fig = p(&[5, 3, 3, 1, 1]);
        assert!(fig.is_t_core(4).unwrap());
        assert!(!fig.is_t_core(3).unwrap());
        assert!(Partition::empty().is_t_core(1).unwrap());
        assert!(Partition::empty().is_t_core(7).unwrap());
        assert!(matches!(fig.is_t_core(0), Err(Error::ZeroModulus)));
    }

    #[test]
    fn diagonal_hooks_examples() {
        let set = p(&[5, 3, 3, 1, 1]).diagonal_hooks().unwrap();
        assert_eq!(set.values(), &[9, 3, 1]);
        assert!(Partition::empty().diagonal_hooks().unwrap().is_empty());
        assert_eq!(p(&[2, 2]).diagonal_hooks().unwrap().values(), &[3, 1]);
        assert!(matches!(p(&[3, 1]).diagonal_hooks(), Err(Error::NotSelfConjugate)));
    }

    #[test]
    fn from_diagonal_hooks_examples() {
        let set = OddHookSet::new([9, 3, 1]).unwrap();
        assert_eq!(from_diagonal_hooks(&set), p(&[5, 3, 3, 1, 1]));
        assert_eq!(from_diagonal_hooks(&OddHookSet::empty()), Partition::empty());
        let set = OddHookSet::new([3, 1]).unwrap();
        assert_eq!(from_diagonal_hooks(&set), p(&[2, 2]));
    }

    #[test]
    fn self_conjugate_examples() {
        assert!(p(&[5, 3, 3, 1, 1]).is_self_conjugate());
        assert!(!p(&[3, 1]).is_self_conjugate());
        assert!(p(&[1]).is_self_conjugate());
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(OddHookSet::new([2]).is_err());
        assert!(OddHookSet::new([3, 3]).is_err());
        assert!(OddHookSet::new([0]).is_err());
    }

    #[test]
    fn json_forms() {
        let fig = p(&[5, 3, 3, 1, 1]);
        assert_eq!(serde_json::to_string(&fig).unwrap(), r#"{"parts":[5,3,3,1,1]}"#);
        let back: Partition = serde_json::from_str(r#"{"parts":[5,3,3,1,1]}"#).unwrap();
        assert_eq!(back, fig);
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[1,2]}"#).is_err());

        let set = OddHookSet::new([9, 3, 1]).unwrap();
        assert_eq!(serde_json::to_string(&set).unwrap(), "[9,3,1]");
        let back: OddHookSet = serde_json::from_str("[1,3,9]").unwrap();
        assert_eq!(back, set);
    }

    #[test]
    fn partition_count_matches_table() {
        // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        let expect = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(all_partitions_of(n as u64).len(), e, "p({n})");
        }
    }

    #[test]
    fn hook_multiset_invariant_under_conjugation() {
        for n in 0..=20u64 {
            for lam in all_partitions_of(n) {
                let conj = lam.conjugate();
                assert_eq!(conj.conjugate(), lam, "conjugation is an involution");
                let mut a: Vec<u64> = lam.hook_grid().values().collect();
                let mut b: Vec<u64> = conj.hook_grid().values().collect();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b, "hook multiset differs for {lam}");
            }
        }
    }

    /// Every self-conjugate partition of size ≤ 60, generated independently
    /// as a set of distinct odd integers summing to the size.
    fn self_conjugate_up_to(max: u64) -> Vec<OddHookSet> {
        let mut out = vec![Vec::new()];
        // extend by strictly increasing odd values
        fn rec(start: u64, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            let mut v = start;
            while v <= left {
                cur.push(v);
                out.push(cur.clone());
                rec(v + 2, left - v, cur, out);
                cur.pop();
                v += 2;
            }
        }
        let mut cur = Vec::new();
        rec(1, max, &mut cur, &mut out);
        out.into_iter().map(|v| OddHookSet::new(v).unwrap()).collect()
    }

    #[test]
    fn diagonal_hook_round_trip() {
        let sets = self_conjugate_up_to(60);
        for set in &sets {
            let lam = from_diagonal_hooks(set);
            assert!(lam.is_self_conjugate(), "{lam} not self-conjugate");
            assert_eq!(lam.size(), set.sum(), "diagonal hooks partition the diagram");
            assert_eq!(&lam.diagonal_hooks().unwrap(), set);
        }
        // Other direction, with λ generated by the independent route
        // (exhaustive partition enumeration, filtered for self-conjugacy).
        // Also certifies coverage: the hook-set route hits every
        // self-conjugate partition of each size.
        for n in 0..=40u64 {
            let direct: Vec<Partition> = all_partitions_of(n)
                .into_iter()
                .filter(|l| l.is_self_conjugate())
                .collect();
            for lam in &direct {
                let set = lam.diagonal_hooks().unwrap();
                assert_eq!(&from_diagonal_hooks(&set), lam);
            }
            let via_sets = sets.iter().filter(|s| s.sum() == n).count();
            assert_eq!(direct.len(), via_sets, "count mismatch at size {n}");
        }
    }

    /// Direct statement of the diagonal-hook characterization of t-cores:
    /// λ self-conjugate is t-core iff the hook set is closed downward by 2t
    /// steps and no pair (repetition allowed) sums to a multiple of 2t.
    fn md_conditions(set: &OddHookSet, t: u64) -> bool {
        let closed = set
            .values()
            .iter()
            .all(|&h| h <= 2 * t || set.contains(h - 2 * t));
        let pairs = set.values().iter().all(|&h1| {
            set.values().iter().all(|&h2| (h1 + h2) % (2 * t) != 0)
        });
        closed && pairs
    }

    #[test]
    fn t_core_matches_diagonal_hook_conditions() {
        for set in self_conjugate_up_to(60) {
            let lam = from_diagonal_hooks(&set);
            for t in 1..=9u64 {
                assert_eq!(
                    lam.is_t_core(t).unwrap(),
                    md_conditions(&set, t),
                    "λ = {lam}, t = {t}"
                );
            }
        }
    }
}
