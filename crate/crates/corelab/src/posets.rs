//! The finite posets P(s,k) (odd integers) and P′(s,k) (planar points), the
//! isomorphism χ between them, and order-ideal enumeration.
//!
//! P(s,k) splits into a left family L(s,k) = ∪ A_j and a right family
//! R(s,k) = ∪ B_j, where
//!
//!   A_j = { 2i−1+2sj : jk+1 ≤ i ≤ ⌊s/2⌋ }
//!   B_j = { 2i−1+2sj : jk+⌈(s+k)/2⌉+1 ≤ i ≤ s }
//!
//! and y covers x exactly when y = x+2s+2t for some 0 ≤ t ≤ k. Planar
//! x-coordinates are stored doubled (`a2 = 2a`) so that the half-integer
//! coordinates arising for odd k stay exact; no floating point anywhere.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::SearchLimit;
use crate::partitions::OddHookSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The poset P(s,k) on odd integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorePoset {
    s: u32,
    k: u32,
    /// Sorted by (rank, value); this is the linear extension everything walks.
    elems: Vec<u64>,
    rank: Vec<u32>,
    side: Vec<Side>,
    /// covers[i] = indices of the elements covered by elems[i].
    covers: Vec<Vec<usize>>,
    index: HashMap<u64, usize>,
}

/// A point of P′(s,k); `a2` is the doubled x-coordinate.
pub type PlanarPoint = (i64, i64);

/// The planar poset P′(s,k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarPoset {
    s: u32,
    k: u32,
    elems: Vec<PlanarPoint>,
    rank: Vec<u32>,
    side: Vec<Side>,
    covers: Vec<Vec<usize>>,
    index: HashMap<PlanarPoint, usize>,
}

fn floor_half(s: u32) -> u64 {
    s as u64 / 2
}

fn ceil_half(n: u32) -> u64 {
    (n as u64 + 1) / 2
}

/// Range of i for A_j (empty when lo > hi).
fn a_range(s: u32, k: u32, j: u64) -> (u64, u64) {
    (j * k as u64 + 1, floor_half(s))
}

/// Range of i for B_j.
fn b_range(s: u32, k: u32, j: u64) -> (u64, u64) {
    (j * k as u64 + ceil_half(s + k) + 1, s as u64)
}

/// Writes odd x as 2i−1+2sj with 1 ≤ i ≤ s, j ≥ 0.
fn decompose(s: u32, x: u64) -> (u64, u64) {
    debug_assert!(x % 2 == 1);
    let h = (x - 1) / 2;
    (h % s as u64 + 1, h / s as u64)
}

/// Closed-form membership x ∈ L(s,k); valid for any positive odd x.
pub fn left_contains(s: u32, k: u32, x: u64) -> bool {
    if x % 2 == 0 {
        return false;
    }
    let (i, j) = decompose(s, x);
    let (lo, hi) = a_range(s, k, j);
    lo <= i && i <= hi
}

/// Closed-form membership x ∈ R(s,k).
pub fn right_contains(s: u32, k: u32, x: u64) -> bool {
    if x % 2 == 0 {
        return false;
    }
    let (i, j) = decompose(s, x);
    let (lo, hi) = b_range(s, k, j);
    lo <= i && i <= hi
}

pub fn build_core_poset(s: u32, k: u32) -> CorePoset {
    assert!(s >= 1 && k >= 1);
    let mut elems: Vec<(u64, u32, Side)> = Vec::new();
    let mut j = 0u64;
    loop {
        let (alo, ahi) = a_range(s, k, j);
        let (blo, bhi) = b_range(s, k, j);
        if alo > ahi && blo > bhi {
            break;
        }
        for i in alo..=ahi {
            elems.push((2 * i - 1 + 2 * s as u64 * j, j as u32, Side::Left));
        }
        for i in blo..=bhi {
            elems.push((2 * i - 1 + 2 * s as u64 * j, j as u32, Side::Right));
        }
        j += 1;
    }
    elems.sort_by_key(|&(v, r, _)| (r, v));
    let index: HashMap<u64, usize> = elems.iter().enumerate().map(|(i, e)| (e.0, i)).collect();
    let mut covers = vec![Vec::new(); elems.len()];
    for (yi, &(y, rank, side)) in elems.iter().enumerate() {
        if rank == 0 {
            continue;
        }
        for t in 0..=k as u64 {
            let x = y - 2 * s as u64 - 2 * t;
            if let Some(&xi) = index.get(&x) {
                debug_assert_eq!(elems[xi].2, side, "cover crosses sides");
                covers[yi].push(xi);
            }
        }
        covers[yi].sort_unstable();
    }
    CorePoset {
        s,
        k,
        rank: elems.iter().map(|e| e.1).collect(),
        side: elems.iter().map(|e| e.2).collect(),
        index,
        covers,
        elems: elems.into_iter().map(|e| e.0).collect(),
    }
}

pub fn build_planar_poset(s: u32, k: u32) -> PlanarPoset {
    assert!(s >= 1 && k >= 1);
    let mut elems: Vec<(PlanarPoint, u32, Side)> = Vec::new();
    let mut j = 0u64;
    loop {
        let (alo, ahi) = a_range(s, k, j);
        let (blo, bhi) = b_range(s, k, j);
        if alo > ahi && blo > bhi {
            break;
        }
        // A'_j: (i − (k/2) j, j), doubled
        for i in alo..=ahi {
            let a2 = 2 * i as i64 - (k as i64) * j as i64;
            elems.push(((a2, j as i64), j as u32, Side::Left));
        }
        // B'_j: (s+1−i + (k/2)(j+1), −j−1), doubled
        for i in blo..=bhi {
            let a2 = 2 * (s as i64 + 1 - i as i64) + (k as i64) * (j as i64 + 1);
            elems.push(((a2, -(j as i64) - 1), j as u32, Side::Right));
        }
        j += 1;
    }
    elems.sort_by_key(|&((a2, _), r, _)| (r, a2));
    let index: HashMap<PlanarPoint, usize> =
        elems.iter().enumerate().map(|(i, e)| (e.0, i)).collect();
    let mut covers = vec![Vec::new(); elems.len()];
    for (yi, &((a2, b), rank, side)) in elems.iter().enumerate() {
        if rank == 0 {
            continue;
        }
        let lower_b = match side {
            Side::Left => b - 1,
            Side::Right => b + 1,
        };
        for (xi, &((xa2, xb), _, xside)) in elems.iter().enumerate() {
            if xside == side && xb == lower_b && (a2 - xa2).abs() <= k as i64 {
                covers[yi].push(xi);
            }
        }
    }
    PlanarPoset {
        s,
        k,
        rank: elems.iter().map(|e| e.1).collect(),
        side: elems.iter().map(|e| e.2).collect(),
        index,
        covers,
        elems: elems.into_iter().map(|e| e.0).collect(),
    }
}

impl CorePoset {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn contains(&self, x: u64) -> bool {
        self.index.contains_key(&x)
    }

    pub fn rank_of(&self, x: u64) -> Option<u32> {
        self.index.get(&x).map(|&i| self.rank[i])
    }

    pub fn side_of(&self, x: u64) -> Option<Side> {
        self.index.get(&x).map(|&i| self.side[i])
    }

    /// Elements covered by x.
    pub fn covered_by(&self, x: u64) -> Option<Vec<u64>> {
        self.index
            .get(&x)
            .map(|&i| self.covers[i].iter().map(|&c| self.elems[c]).collect())
    }

    pub(crate) fn cover_lists(&self) -> &[Vec<usize>] {
        &self.covers
    }

    /// Membership plus down-closure.
    pub fn is_ideal(&self, elements: &[u64]) -> bool {
        let mut mask = vec![false; self.elems.len()];
        for &x in elements {
            match self.index.get(&x) {
                Some(&i) => mask[i] = true,
                None => return false,
            }
        }
        mask.iter()
            .enumerate()
            .all(|(i, &inc)| !inc || self.covers[i].iter().all(|&c| mask[c]))
    }
}

impl PlanarPoset {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[PlanarPoint] {
        &self.elems
    }

    pub fn contains(&self, p: PlanarPoint) -> bool {
        self.index.contains_key(&p)
    }

    pub fn rank_of(&self, p: PlanarPoint) -> Option<u32> {
        self.index.get(&p).map(|&i| self.rank[i])
    }

    pub fn covered_by(&self, p: PlanarPoint) -> Option<Vec<PlanarPoint>> {
        self.index
            .get(&p)
            .map(|&i| self.covers[i].iter().map(|&c| self.elems[c]).collect())
    }

    pub fn is_ideal(&self, elements: &[PlanarPoint]) -> bool {
        let mut mask = vec![false; self.elems.len()];
        for &p in elements {
            match self.index.get(&p) {
                Some(&i) => mask[i] = true,
                None => return false,
            }
        }
        mask.iter()
            .enumerate()
            .all(|(i, &inc)| !inc || self.covers[i].iter().all(|&c| mask[c]))
    }
}

/// Equality as labeled posets: same points, same cover relation.
pub fn posets_equal(p1: &PlanarPoset, p2: &PlanarPoset) -> bool {
    if p1.elems != p2.elems {
        return false;
    }
    // same element order on both sides, so index-based cover lists compare directly
    p1.covers == p2.covers
}

/// The isomorphism χ: P(s,k) → P′(s,k), in doubled coordinates.
pub fn chi(s: u32, k: u32, x: u64) -> Result<PlanarPoint> {
    if x % 2 == 1 {
        let (i, j) = decompose(s, x);
        let (alo, ahi) = a_range(s, k, j);
        if alo <= i && i <= ahi {
            return Ok((2 * i as i64 - k as i64 * j as i64, j as i64));
        }
        let (blo, bhi) = b_range(s, k, j);
        if blo <= i && i <= bhi {
            let a2 = 2 * (s as i64 + 1 - i as i64) + k as i64 * (j as i64 + 1);
            return Ok((a2, -(j as i64) - 1));
        }
    }
    Err(Error::NotInPoset { s, k, element: x })
}

pub fn chi_inv(s: u32, k: u32, p: PlanarPoint) -> Result<u64> {
    let (a2, b) = p;
    let not_in = || Error::NotInPlanarPoset { s, k, a2_halved: format_half(a2), b };
    if b >= 0 {
        let j = b as i64;
        let two_i = a2 + k as i64 * j;
        if two_i <= 0 || two_i % 2 != 0 {
            return Err(not_in());
        }
        let i = (two_i / 2) as u64;
        let (lo, hi) = a_range(s, k, j as u64);
        if lo <= i && i <= hi {
            return Ok(2 * i - 1 + 2 * s as u64 * j as u64);
        }
    } else {
        let j = (-b - 1) as i64;
        let two_i = 2 * (s as i64 + 1) + k as i64 * (j + 1) - a2;
        if two_i <= 0 || two_i % 2 != 0 {
            return Err(not_in());
        }
        let i = (two_i / 2) as u64;
        let (lo, hi) = b_range(s, k, j as u64);
        if lo <= i && i <= hi {
            return Ok(2 * i - 1 + 2 * s as u64 * j as u64);
        }
    }
    Err(not_in())
}

/// Nice ideal predicate: no pair (repetition allowed) sums into
/// {2s, 2s+2, …, 2s+2k}.
pub fn is_nice(s: u32, k: u32, elements: &[u64]) -> bool {
    let lo = 2 * s as u64;
    let hi = lo + 2 * k as u64;
    for (idx, &h1) in elements.iter().enumerate() {
        for &h2 in &elements[idx..] {
            let sum = h1 + h2;
            if lo <= sum && sum <= hi {
                return false;
            }
        }
    }
    true
}

/// Admissible ideal predicate for P′(s,k): no points (a,0) and (a′,−1) with
/// |a−a′| ≤ k/2 (doubled: |a2−a2′| ≤ k).
pub fn is_admissible(s: u32, k: u32, elements: &[PlanarPoint]) -> bool {
    let _ = s;
    for &(a2, b) in elements {
        if b != 0 {
            continue;
        }
        for &(c2, d) in elements {
            if d == -1 && (a2 - c2).abs() <= k as i64 {
                return false;
            }
        }
    }
    true
}

/// Visits every down-closed subset exactly once, as indices into the linear
/// extension. Exclude branches come before include branches, so the output
/// order is deterministic.
pub(crate) fn walk_ideals(
    covers: &[Vec<usize>],
    limit: &SearchLimit,
    what: &'static str,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let n = covers.len();
    let mut mask = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut counter = 0u64;
    fn rec(
        pos: usize,
        n: usize,
        covers: &[Vec<usize>],
        mask: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        limit: &SearchLimit,
        what: &'static str,
        counter: &mut u64,
        visit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if pos == n {
            limit.tick(counter, what)?;
            return visit(stack);
        }
        rec(pos + 1, n, covers, mask, stack, limit, what, counter, visit)?;
        if covers[pos].iter().all(|&c| mask[c]) {
            mask[pos] = true;
            stack.push(pos);
            rec(pos + 1, n, covers, mask, stack, limit, what, counter, visit)?;
            stack.pop();
            mask[pos] = false;
        }
        Ok(())
    }
    rec(0, n, covers, &mut mask, &mut stack, limit, what, &mut counter, visit)
}

/// All order ideals of P(s,k), each as a set of odd integers.
pub fn enumerate_ideals(poset: &CorePoset, limit: &SearchLimit) -> Result<Vec<OddHookSet>> {
    let mut out = Vec::new();
    walk_ideals(&poset.covers, limit, "order ideals", &mut |idxs| {
        let vals = idxs.iter().map(|&i| poset.elems[i]);
        out.push(OddHookSet::new(vals).map_err(|e| Error::Internal(e.to_string()))?);
        Ok(())
    })?;
    Ok(out)
}

/// All order ideals of P′(s,k), each sorted by (rank, a2).
pub fn enumerate_planar_ideals(
    poset: &PlanarPoset,
    limit: &SearchLimit,
) -> Result<Vec<Vec<PlanarPoint>>> {
    let mut out = Vec::new();
    walk_ideals(&poset.covers, limit, "order ideals", &mut |idxs| {
        out.push(idxs.iter().map(|&i| poset.elems[i]).collect());
        Ok(())
    })?;
    Ok(out)
}

/// Nice ideals of P(s,k). The niceness check runs incrementally during the
/// walk: a pair-sum violation prunes the whole include subtree.
pub fn enumerate_nice_ideals(s: u32, k: u32, limit: &SearchLimit) -> Result<Vec<OddHookSet>> {
    let mut out = Vec::new();
    nice_ideal_walk(s, k, limit, &mut |vals| {
        out.push(OddHookSet::new(vals.iter().copied()).map_err(|e| Error::Internal(e.to_string()))?);
        Ok(())
    })?;
    Ok(out)
}

pub fn count_nice_ideals(s: u32, k: u32, limit: &SearchLimit) -> Result<u64> {
    let mut n = 0u64;
    nice_ideal_walk(s, k, limit, &mut |_| {
        n += 1;
        Ok(())
    })?;
    Ok(n)
}

fn nice_ideal_walk(
    s: u32,
    k: u32,
    limit: &SearchLimit,
    visit: &mut dyn FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    let poset = build_core_poset(s, k);
    let lo = 2 * s as u64;
    let hi = lo + 2 * k as u64;
    let n = poset.elems.len();
    let mut mask = vec![false; n];
    let mut chosen: Vec<u64> = Vec::new();
    let mut counter = 0u64;

    struct Ctx<'a> {
        poset: &'a CorePoset,
        lo: u64,
        hi: u64,
        limit: &'a SearchLimit,
    }
    fn rec(
        c: &Ctx,
        pos: usize,
        mask: &mut Vec<bool>,
        chosen: &mut Vec<u64>,
        counter: &mut u64,
        visit: &mut dyn FnMut(&[u64]) -> Result<()>,
    ) -> Result<()> {
        if pos == c.poset.elems.len() {
            c.limit.tick(counter, "nice ideals")?;
            return visit(chosen);
        }
        rec(c, pos + 1, mask, chosen, counter, visit)?;
        let v = c.poset.elems[pos];
        let down_closed = c.poset.covers[pos].iter().all(|&x| mask[x]);
        let sum_ok = chosen
            .iter()
            .chain(std::iter::once(&v))
            .all(|&u| !(c.lo <= u + v && u + v <= c.hi));
        if down_closed && sum_ok {
            mask[pos] = true;
            chosen.push(v);
            rec(c, pos + 1, mask, chosen, counter, visit)?;
            chosen.pop();
            mask[pos] = false;
        }
        Ok(())
    }
    let ctx = Ctx { poset: &poset, lo, hi, limit };
    rec(&ctx, 0, &mut mask, &mut chosen, &mut counter, visit)
}

/// Admissible ideals J(P′(s,k)), with the closeness check run incrementally.
pub fn enumerate_admissible_ideals(
    s: u32,
    k: u32,
    limit: &SearchLimit,
) -> Result<Vec<Vec<PlanarPoint>>> {
    let mut out = Vec::new();
    admissible_walk(s, k, None, limit, &mut |pts| {
        out.push(pts.to_vec());
        Ok(())
    })?;
    Ok(out)
}

pub fn count_admissible_ideals(s: u32, k: u32, limit: &SearchLimit) -> Result<u64> {
    let mut n = 0u64;
    admissible_walk(s, k, None, limit, &mut |_| {
        n += 1;
        Ok(())
    })?;
    Ok(n)
}

/// J*(P′(2m+2, 2k+1)): admissible ideals that avoid the point (m+1, 0).
pub fn enumerate_restricted_ideals(
    m: u32,
    k: u32,
    limit: &SearchLimit,
) -> Result<Vec<Vec<PlanarPoint>>> {
    let banned = (2 * (m as i64 + 1), 0);
    let mut out = Vec::new();
    admissible_walk(2 * m + 2, 2 * k + 1, Some(banned), limit, &mut |pts| {
        out.push(pts.to_vec());
        Ok(())
    })?;
    Ok(out)
}

struct AdmissibleWalk<'a> {
    poset: PlanarPoset,
    k: i64,
    banned: Option<PlanarPoint>,
    limit: &'a SearchLimit,
    mask: Vec<bool>,
    chosen: Vec<PlanarPoint>,
    row0: Vec<i64>,
    rowm1: Vec<i64>,
    counter: u64,
}

fn admissible_walk(
    s: u32,
    k: u32,
    banned: Option<PlanarPoint>,
    limit: &SearchLimit,
    visit: &mut dyn FnMut(&[PlanarPoint]) -> Result<()>,
) -> Result<()> {
    let poset = build_planar_poset(s, k);
    let n = poset.elems.len();
    let mut w = AdmissibleWalk {
        poset,
        k: k as i64,
        banned,
        limit,
        mask: vec![false; n],
        chosen: Vec::new(),
        row0: Vec::new(),
        rowm1: Vec::new(),
        counter: 0,
    };
    w.rec(0, visit)
}

impl AdmissibleWalk<'_> {
    fn rec(&mut self, pos: usize, visit: &mut dyn FnMut(&[PlanarPoint]) -> Result<()>) -> Result<()> {
        if pos == self.poset.elems.len() {
            self.limit.tick(&mut self.counter, "admissible ideals")?;
            return visit(&self.chosen);
        }
        self.rec(pos + 1, visit)?;
        let p = self.poset.elems[pos];
        if Some(p) == self.banned {
            return Ok(());
        }
        if !self.poset.covers[pos].iter().all(|&x| self.mask[x]) {
            return Ok(());
        }
        let close_pair = match p.1 {
            0 => self.rowm1.iter().any(|&c2| (p.0 - c2).abs() <= self.k),
            -1 => self.row0.iter().any(|&c2| (p.0 - c2).abs() <= self.k),
            _ => false,
        };
        if close_pair {
            return Ok(());
        }
        self.mask[pos] = true;
        self.chosen.push(p);
        match p.1 {
            0 => self.row0.push(p.0),
            -1 => self.rowm1.push(p.0),
            _ => {}
        }
        self.rec(pos + 1, visit)?;
        match p.1 {
            0 => {
                self.row0.pop();
            }
            -1 => {
                self.rowm1.pop();
            }
            _ => {}
        }
        self.chosen.pop();
        self.mask[pos] = false;
        Ok(())
    }
}

/// Prints a doubled coordinate in halves: `5` or `2.5`.
pub fn format_half(a2: i64) -> String {
    if a2 % 2 == 0 {
        format!("{}", a2 / 2)
    } else {
        format!("{}.5", a2 / 2)
    }
}

/// DOT output for the Hasse diagram of P(s,k); edges run from covered to
/// covering element.
pub fn core_poset_dot(p: &CorePoset) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"P({},{})\" {{\n", p.s, p.k));
    out.push_str("  rankdir=BT;\n");
    for &v in &p.elems {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    for (yi, cov) in p.covers.iter().enumerate() {
        for &xi in cov {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", p.elems[xi], p.elems[yi]));
        }
    }
    out.push_str("}\n");
    out
}

pub fn planar_poset_dot(p: &PlanarPoset) -> String {
    let label = |q: PlanarPoint| format!("({},{})", format_half(q.0), q.1);
    let mut out = String::new();
    out.push_str(&format!("digraph \"P'({},{})\" {{\n", p.s, p.k));
    out.push_str("  rankdir=BT;\n");
    for &q in &p.elems {
        out.push_str(&format!("  \"{}\";\n", label(q)));
    }
    for (yi, cov) in p.covers.iter().enumerate() {
        for &xi in cov {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                label(p.elems[xi]),
                label(p.elems[yi])
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// Canonical serialization order for planar ideals: rank, then a2.
pub fn sort_planar_ideal(elements: &mut [PlanarPoint]) {
    elements.sort_by_key(|&(a2, b)| (if b >= 0 { b } else { -b - 1 }, a2));
}

/// JSON form of a planar ideal: `{"s":20,"k":4,"elements":[[a2,b],…]}` with
/// doubled x-coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub s: u32,
    pub k: u32,
    pub elements: Vec<(i64, i64)>,
}

impl IdealJson {
    pub fn new(s: u32, k: u32, mut elements: Vec<PlanarPoint>) -> Self {
        sort_planar_ideal(&mut elements);
        Self { s, k, elements }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_range(lo: u64, hi: u64) -> Vec<u64> {
        (lo..=hi).filter(|v| v % 2 == 1).collect()
    }

    #[test]
    fn p20_3_has_expected_elements() {
        let p = build_core_poset(20, 3);
        let by_rank = |r: u32, side: Side| -> Vec<u64> {
            p.elements()
                .iter()
                .copied()
                .filter(|&v| p.rank_of(v) == Some(r) && p.side_of(v) == Some(side))
                .collect()
        };
        assert_eq!(by_rank(0, Side::Left), odd_range(1, 19));
        assert_eq!(by_rank(1, Side::Left), odd_range(47, 59));
        assert_eq!(by_rank(2, Side::Left), vec![93, 95, 97, 99]);
        assert_eq!(by_rank(3, Side::Left), vec![139]);
        assert_eq!(by_rank(0, Side::Right), odd_range(25, 39));
        assert_eq!(by_rank(1, Side::Right), odd_range(71, 79));
        assert_eq!(by_rank(2, Side::Right), vec![117, 119]);
        assert_eq!(by_rank(3, Side::Right), Vec::<u64>::new());
    }

    #[test]
    fn p20_4_has_expected_elements() {
        let p = build_core_poset(20, 4);
        let left: Vec<u64> = p
            .elements()
            .iter()
            .copied()
            .filter(|&v| p.side_of(v) == Some(Side::Left))
            .collect();
        let right: Vec<u64> = p
            .elements()
            .iter()
            .copied()
            .filter(|&v| p.side_of(v) == Some(Side::Right))
            .collect();
        let mut expect_left = odd_range(1, 19);
        expect_left.extend(odd_range(49, 59));
        expect_left.extend([97, 99]);
        let mut expect_right = odd_range(25, 39);
        expect_right.extend(odd_range(73, 79));
        assert_eq!(left, expect_left);
        assert_eq!(right, expect_right);
    }

    #[test]
    fn tiny_posets() {
        let p = build_core_poset(4, 4);
        assert_eq!(p.elements(), &[1, 3]);
        assert!(p.cover_lists().iter().all(|c| c.is_empty()));

        let p = build_core_poset(2, 3);
        assert_eq!(p.elements(), &[1]);

        let q = build_planar_poset(4, 4);
        assert_eq!(q.elements(), &[(2, 0), (4, 0)]);
        assert!(q.elements().iter().all(|&p| q.covered_by(p).unwrap().is_empty()));
    }

    #[test]
    fn planar_20_3_has_expected_elements() {
        let q = build_planar_poset(20, 3);
        // rank 1 of L': (2.5,1) … (8.5,1)
        let rank1: Vec<PlanarPoint> = q
            .elements()
            .iter()
            .copied()
            .filter(|&(_, b)| b == 1)
            .collect();
        assert_eq!(rank1, (0..7).map(|t| (5 + 2 * t, 1)).collect::<Vec<_>>());
        // R' rank -1: (9.5,-1) … (2.5,-1) stored as a2 = 19 … 5
        let rm1: Vec<PlanarPoint> = q
            .elements()
            .iter()
            .copied()
            .filter(|&(_, b)| b == -1)
            .collect();
        assert_eq!(rm1, (0..8).map(|t| (5 + 2 * t, -1)).collect::<Vec<_>>());
        assert!(q.contains((11, 3))); // (5.5, 3)
        assert!(q.contains((12, -2))); // (6, -2)
        assert!(q.contains((11, -3)) && q.contains((13, -3)));
    }

    #[test]
    fn planar_20_4_has_expected_elements() {
        let q = build_planar_poset(20, 4);
        let row = |b: i64| -> Vec<i64> {
            q.elements()
                .iter()
                .copied()
                .filter(|&(_, bb)| bb == b)
                .map(|(a2, _)| a2)
                .collect()
        };
        assert_eq!(row(0), (1..=10).map(|a| 2 * a).collect::<Vec<_>>());
        assert_eq!(row(1), (3..=8).map(|a| 2 * a).collect::<Vec<_>>());
        assert_eq!(row(2), vec![10, 12]);
        assert_eq!(row(-1), (3..=10).map(|a| 2 * a).collect::<Vec<_>>());
        assert_eq!(row(-2), (5..=8).map(|a| 2 * a).collect::<Vec<_>>());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(20, 4, 49).unwrap(), (6, 1)); // (3, 1)
        assert_eq!(chi(20, 4, 25).unwrap(), (20, -1)); // (10, -1)
        for s in 2..=10 {
            assert_eq!(chi(s, 3, 1).unwrap(), (2, 0)); // (1, 0)
        }
        assert!(chi(20, 4, 21).is_err());
        assert_eq!(chi_inv(20, 4, (6, 1)).unwrap(), 49);
        assert!(chi_inv(20, 4, (7, 1)).is_err());
    }

    #[test]
    fn chi_round_trip_everywhere() {
        for s in 2..=24u32 {
            for k in 1..=6u32 {
                let p = build_core_poset(s, k);
                for &x in p.elements() {
                    let pt = chi(s, k, x).unwrap();
                    assert_eq!(chi_inv(s, k, pt).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn nice_examples() {
        assert!(is_nice(20, 3, &[1, 29, 31, 33, 35, 75]));
        assert!(!is_nice(20, 3, &[1, 39]));
        assert!(is_nice(7, 2, &[]));
    }

    #[test]
    fn admissible_examples() {
        // the worked ideal over P'(20,4)
        let ideal = [(2, 0), (4, 0), (6, 0), (8, 0), (10, 0), (6, 1), (16, -1), (20, -1)];
        assert!(is_admissible(20, 4, &ideal));
        let q = build_planar_poset(20, 4);
        assert!(q.is_ideal(&ideal));
        // completed down-closure of {(5,0),(6,-1)}: close pair |5-6| <= 2
        let bad = [(10, 0), (12, -1)];
        assert!(!is_admissible(20, 4, &bad));
        assert!(is_admissible(20, 4, &[]));
    }

    #[test]
    fn ideal_enumeration_micro() {
        let lim = SearchLimit::default();
        let q = build_planar_poset(4, 4);
        let ideals = enumerate_planar_ideals(&q, &lim).unwrap();
        assert_eq!(ideals.len(), 4);
        assert_eq!(count_admissible_ideals(4, 4, &lim).unwrap(), 4);
        assert_eq!(count_nice_ideals(4, 4, &lim).unwrap(), 4);

        let p = build_core_poset(2, 3);
        let ideals = enumerate_ideals(&p, &lim).unwrap();
        let expect: Vec<Vec<u64>> = vec![vec![], vec![1]];
        let got: Vec<Vec<u64>> = ideals.iter().map(|s| s.values().to_vec()).collect();
        assert_eq!(got, expect);
        assert_eq!(count_nice_ideals(2, 3, &lim).unwrap(), 2);

        let tiny = SearchLimit::new(3, None);
        let err = enumerate_ideals(&build_core_poset(8, 1), &tiny).unwrap_err();
        assert!(matches!(err, crate::error::Error::Overflow { .. }));
    }

    #[test]
    fn poset_identity_even_k() {
        for m in 1..=8u32 {
            for k in 1..=4u32 {
                let a = build_planar_poset(2 * m, 2 * k);
                let b = build_planar_poset(2 * m + 1, 2 * k);
                assert!(posets_equal(&a, &b), "P'({},{}) vs P'({},{})", 2 * m, 2 * k, 2 * m + 1, 2 * k);
            }
        }
        let a = build_planar_poset(8, 4);
        let c = build_planar_poset(8, 2);
        assert!(!posets_equal(&a, &c));
        assert!(posets_equal(&a, &a.clone()));
    }

    #[test]
    fn restricted_ideals_match_smaller_poset() {
        let lim = SearchLimit::default();
        for m in 1..=5u32 {
            for k in 1..=3u32 {
                let mut restricted = enumerate_restricted_ideals(m, k, &lim).unwrap();
                let mut small =
                    enumerate_admissible_ideals(2 * m + 1, 2 * k + 1, &lim).unwrap();
                for v in restricted.iter_mut().chain(small.iter_mut()) {
                    v.sort_unstable();
                }
                restricted.sort();
                small.sort();
                assert_eq!(restricted, small, "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn rank_bounds_and_finiteness() {
        for s in 2..=40u32 {
            for k in 1..=8u32 {
                let p = build_core_poset(s, k);
                for &x in p.elements() {
                    let j = p.rank_of(x).unwrap() as u64;
                    match p.side_of(x).unwrap() {
                        Side::Left => assert!(j * k as u64 + 1 <= s as u64 / 2),
                        Side::Right => {
                            assert!(j * k as u64 + (s as u64 + k as u64 + 1) / 2 + 1 <= s as u64)
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_membership_matches_built_poset() {
        for s in 2..=24u32 {
            for k in 1..=6u32 {
                let p = build_core_poset(s, k);
                let max = p.elements().iter().max().copied().unwrap_or(1);
                for x in (1..=max + 4 * s as u64).step_by(2) {
                    let in_poset = p.contains(x);
                    assert_eq!(
                        left_contains(s, k, x) || right_contains(s, k, x),
                        in_poset,
                        "s={s} k={k} x={x}"
                    );
                    assert!(!(left_contains(s, k, x) && right_contains(s, k, x)));
                }
            }
        }
    }

    #[test]
    fn membership_closure_property() {
        // For odd x > 2s: x ∈ L(s,k) iff x−2t ∈ L(s,k) for all s ≤ t ≤ s+k;
        // same for R. Checked over the closed-form membership test.
        for s in 2..=20u32 {
            for k in 1..=5u32 {
                let p = build_core_poset(s, k);
                let max = p.elements().iter().max().copied().unwrap_or(1)
                    + 2 * (s + k) as u64;
                for x in (2 * s as u64 + 1..=max).step_by(2) {
                    let all_l = (s..=s + k).all(|t| {
                        x > 2 * t as u64 && left_contains(s, k, x - 2 * t as u64)
                    });
                    assert_eq!(left_contains(s, k, x), all_l, "L side s={s} k={k} x={x}");
                    let all_r = (s..=s + k).all(|t| {
                        x > 2 * t as u64 && right_contains(s, k, x - 2 * t as u64)
                    });
                    assert_eq!(right_contains(s, k, x), all_r, "R side s={s} k={k} x={x}");
                }
            }
        }
    }

    #[test]
    fn each_high_rank_element_covers_k_plus_one() {
        for s in 2..=24u32 {
            for k in 1..=6u32 {
                let p = build_core_poset(s, k);
                for &x in p.elements() {
                    if p.rank_of(x).unwrap() >= 1 {
                        assert_eq!(
                            p.covered_by(x).unwrap().len(),
                            k as usize + 1,
                            "element {x} of P({s},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output_is_stable() {
        let p = build_core_poset(4, 4);
        assert_eq!(
            core_poset_dot(&p),
            "digraph \"P(4,4)\" {\n  rankdir=BT;\n  \"1\";\n  \"3\";\n}\n"
        );
        let q = build_planar_poset(2, 3);
        assert_eq!(
            planar_poset_dot(&q),
            "digraph \"P'(2,3)\" {\n  rankdir=BT;\n  \"(1,0)\";\n}\n"
        );
    }

    #[test]
    fn ideal_json_form() {
        let j = IdealJson::new(20, 4, vec![(6, 1), (2, 0), (16, -1)]);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"s":20,"k":4,"elements":[[2,0],[16,-1],[6,1]]}"#
        );
    }
}
