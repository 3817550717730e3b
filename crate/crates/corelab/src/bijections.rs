//! The bijection chain between poset ideals and symmetric Dyck words.
//!
//! Forward direction, by parity of the original parameters (s, k):
//!
//! * even s, even k:  ideal → φ → Q(m,κ) → δ → SD(s, k)
//! * odd  s, even k:  same posets (P′(2m,2κ) = P′(2m+1,2κ)), then ξ
//! * even s, odd  k:  ideal → ψ → Q′(m,κ) → γ → SD(s, k)
//! * odd  s, odd  k:  ideal of P′(2m+1,2κ+1), read inside P′(2m+2,2κ+1),
//!   then ψ → Q*(m+1,κ) → η → SD(s, k)
//!
//! φ and ψ walk a black/white coloring of the grid greedily; the others are
//! cut-and-reflect word surgeries built from the two primitive maps α and β.
//! Everything here is exact integer arithmetic on half-unit coordinates.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits::SearchLimit;
use crate::partitions::{from_diagonal_hooks, OddHookSet, Partition};
use crate::paths::{enumerate, matches, FamilySpec, PathWord, Step};
use crate::posets::{
    build_planar_poset, chi, chi_inv, is_admissible, sort_planar_ideal, PlanarPoint,
};

// ---------------------------------------------------------------------------
// Greedy grid walks: φ and ψ
// ---------------------------------------------------------------------------

/// Which points exist on the coloring grid: every integer point (even a2,
/// used by φ) or only the visible points (a2 ≡ b mod 2, used by ψ).
#[derive(Clone, Copy, PartialEq, Eq)]
enum GridKind {
    Integer,
    Visible,
}

impl GridKind {
    fn admits(self, a2: i64, b: i64) -> bool {
        match self {
            GridKind::Integer => a2 % 2 == 0,
            GridKind::Visible => (a2 - b).rem_euclid(2) == 0,
        }
    }
}

/// Black/white coloring of the bounded grid strip determined by an ideal.
/// Points outside 0 ≤ a2 ≤ amax2, and points absent from the grid kind,
/// are never black.
struct Coloring {
    amax2: i64,
    kind: GridKind,
    ideal: HashSet<PlanarPoint>,
}

impl Coloring {
    fn on_grid(&self, a2: i64, b: i64) -> bool {
        0 <= a2 && a2 <= self.amax2 && self.kind.admits(a2, b)
    }

    fn is_black(&self, a2: i64, b: i64) -> bool {
        if !self.on_grid(a2, b) {
            return false;
        }
        if b >= 0 {
            self.ideal.contains(&(a2, b))
        } else {
            !self.ideal.contains(&(a2, b))
        }
    }
}

/// Shared construction for φ and ψ. From (0,0): if some same-level point
/// within horizontal reach is black, move up when the up-target is black and
/// otherwise to the nearest black point; if none is, move down when the
/// down-target is black and otherwise stop.
///
/// With no horizontal reach (the k = 0 family, whose words are pure U/D) the
/// same-level existence test is vacuous and would strand every walk below
/// the axis; the boundary-tracing reading that the inverse recoloring pins
/// down is "up when the up-target is black, else down when the down-target
/// is black, else stop".
fn greedy_walk(col: &Coloring, diag2: i64, hmax: u32, kparam: u32) -> (PathWord, (i64, i64)) {
    let mut x = 0i64;
    let mut y = 0i64;
    let mut steps = Vec::new();
    loop {
        let go_up = if hmax == 0 {
            col.is_black(x + diag2, y + 1)
        } else {
            (1..=hmax).any(|l| col.is_black(x + 2 * l as i64, y))
                && col.is_black(x + diag2, y + 1)
        };
        if go_up {
            x += diag2;
            y += 1;
            steps.push(Step::Up);
            continue;
        }
        let horiz = (1..=hmax).find(|&l| col.is_black(x + 2 * l as i64, y));
        if let Some(l) = horiz {
            x += 2 * l as i64;
            steps.push(Step::Horiz(l));
        } else if col.is_black(x + diag2, y - 1) {
            x += diag2;
            y -= 1;
            steps.push(Step::Down);
        } else {
            break;
        }
    }
    let word = PathWord::new(steps, kparam).expect("no zero-width steps are generated");
    (word, (x, y))
}

fn validate_planar_ideal(s: u32, k: u32, ideal: &[PlanarPoint]) -> Result<()> {
    let poset = build_planar_poset(s, k);
    if !poset.is_ideal(ideal) {
        if let Some(&p) = ideal.iter().find(|&&p| !poset.contains(p)) {
            return Err(Error::NotInPlanarPoset {
                s,
                k,
                a2_halved: crate::posets::format_half(p.0),
                b: p.1,
            });
        }
        return Err(Error::NotDownClosed);
    }
    if !is_admissible(s, k, ideal) {
        let bad = ideal
            .iter()
            .filter(|&&(_, b)| b == 0)
            .flat_map(|&(a2, _)| {
                ideal
                    .iter()
                    .filter(move |&&(c2, d)| d == -1 && (a2 - c2).abs() <= k as i64)
                    .map(move |&(c2, _)| (a2, c2))
            })
            .next();
        let (a, c) = bad.unwrap_or((0, 0));
        return Err(Error::NotAdmissible {
            a: crate::posets::format_half(a),
            a_prime: crate::posets::format_half(c),
        });
    }
    Ok(())
}

/// φ: admissible ideals of P′(2m, 2k) → Q(m,k).
pub fn phi(m: u32, k: u32, ideal: &[PlanarPoint]) -> Result<PathWord> {
    validate_planar_ideal(2 * m, 2 * k, ideal)?;
    let col = Coloring {
        amax2: 2 * (m as i64 + 1),
        kind: GridKind::Integer,
        ideal: ideal.iter().copied().collect(),
    };
    let (word, end) = greedy_walk(&col, 2 * k as i64, 2 * k - 1, 2 * k);
    q_family(m, k, &word).map_err(|e| {
        Error::Internal(format!("phi endpoint {end:?} escaped Q({m},{k}): {e}"))
    })?;
    Ok(word)
}

/// ψ: admissible ideals of P′(2m, 2k+1) → Q′(m,k), over visible points.
pub fn psi(m: u32, k: u32, ideal: &[PlanarPoint]) -> Result<PathWord> {
    validate_planar_ideal(2 * m, 2 * k + 1, ideal)?;
    let col = Coloring {
        amax2: 2 * m as i64 + 1,
        kind: GridKind::Visible,
        ideal: ideal.iter().copied().collect(),
    };
    let (word, end) = greedy_walk(&col, 2 * k as i64 + 1, 2 * k, 2 * k + 1);
    q_prime_family(m, k, &word).map_err(|e| {
        Error::Internal(format!("psi endpoint {end:?} escaped Q'({m},{k}): {e}"))
    })?;
    Ok(word)
}

/// Position of `b` relative to the path through `verts` at x = a2, plus
/// whether (a2, b) is the ending point of a step. Requires 0 ≤ a2 ≤ x_end.
fn classify(verts: &[(i64, i64)], a2: i64, b: i64) -> (std::cmp::Ordering, bool) {
    let ending = verts[1..].iter().any(|&(x, y)| x == a2 && y == b);
    if verts.len() == 1 {
        return (b.cmp(&0), false);
    }
    for w in verts.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        if a2 < x0 || a2 > x1 {
            continue;
        }
        // compare b against y0 + (y1−y0)(a2−x0)/(x1−x0) without division
        let lhs = b * (x1 - x0);
        let rhs = y0 * (x1 - x0) + (y1 - y0) * (a2 - x0);
        return (lhs.cmp(&rhs), ending);
    }
    unreachable!("a2 within path span");
}

/// Recolors the strip from a word and reads the ideal back off:
/// below the path black, above white, on the path black exactly at step
/// ending points, and right of the endpoint black exactly below the axis.
fn recolor_ideal(word: &PathWord, amax2: i64, kind: GridKind) -> Vec<PlanarPoint> {
    let verts = word.vertices();
    let x_end = verts.last().unwrap().0;
    let min_y = verts.iter().map(|v| v.1).min().unwrap();
    let max_y = verts.iter().map(|v| v.1).max().unwrap();
    let mut ideal = Vec::new();
    for a2 in 0..=amax2 {
        for b in min_y..=max_y {
            if !kind.admits(a2, b) {
                continue;
            }
            let black = if a2 > x_end {
                b < 0
            } else {
                match classify(&verts, a2, b) {
                    (std::cmp::Ordering::Greater, _) => false,
                    (std::cmp::Ordering::Less, _) => true,
                    (std::cmp::Ordering::Equal, ending) => ending,
                }
            };
            if (b >= 0) == black {
                ideal.push((a2, b));
            }
        }
    }
    sort_planar_ideal(&mut ideal);
    ideal
}

/// φ′: Q(m,k) → admissible ideals of P′(2m, 2k).
pub fn phi_inv(m: u32, k: u32, word: &PathWord) -> Result<Vec<PlanarPoint>> {
    q_family(m, k, word)?;
    let ideal = recolor_ideal(word, 2 * (m as i64 + 1), GridKind::Integer);
    validate_planar_ideal(2 * m, 2 * k, &ideal)
        .map_err(|e| Error::Internal(format!("phi_inv produced a bad ideal: {e}")))?;
    Ok(ideal)
}

/// ψ′: Q′(m,k) → admissible ideals of P′(2m, 2k+1).
pub fn psi_inv(m: u32, k: u32, word: &PathWord) -> Result<Vec<PlanarPoint>> {
    q_prime_family(m, k, word)?;
    let ideal = recolor_ideal(word, 2 * m as i64 + 1, GridKind::Visible);
    validate_planar_ideal(2 * m, 2 * k + 1, &ideal)
        .map_err(|e| Error::Internal(format!("psi_inv produced a bad ideal: {e}")))?;
    Ok(ideal)
}

// ---------------------------------------------------------------------------
// Path families Q, Q′, Q*
// ---------------------------------------------------------------------------

/// Which component of a Q-type union a word lives in: height-0 families are
/// indexed by the width deficit i, the height −1 family stands alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QComponent {
    Flat { i: u32 },
    Deep,
}

fn fb_prime_check(word: &PathWord, width_hu: i64, kparam: u32, height: i64) -> bool {
    matches(word, &FamilySpec::fb_prime(width_hu, kparam, height))
}

/// Q(m,k) = (∪_{i=0}^{k−2} FB′₀(m−i, 2k)) ∪ FB′₋₁(m+1, 2k).
pub fn q_family(m: u32, k: u32, word: &PathWord) -> Result<QComponent> {
    let (width, height, _) = word.profile();
    if height == 0 && width % 2 == 0 {
        let i = m as i64 - width / 2;
        if 0 <= i && i <= k as i64 - 2 && fb_prime_check(word, width, 2 * k, 0) {
            return Ok(QComponent::Flat { i: i as u32 });
        }
    }
    if height == -1
        && width == 2 * (m as i64 + 1)
        && fb_prime_check(word, width, 2 * k, -1)
    {
        return Ok(QComponent::Deep);
    }
    Err(Error::FamilyMismatch(format!("\"{word}\" is not in Q({m},{k})")))
}

/// Q′(m,k) = (∪_{i=0}^{k−1} FB′₀(m−i, 2k+1)) ∪ FB′₋₁(m+½, 2k+1).
pub fn q_prime_family(m: u32, k: u32, word: &PathWord) -> Result<QComponent> {
    let (width, height, _) = word.profile();
    if height == 0 && width % 2 == 0 {
        let i = m as i64 - width / 2;
        if 0 <= i && i <= k as i64 - 1 && fb_prime_check(word, width, 2 * k + 1, 0) {
            return Ok(QComponent::Flat { i: i as u32 });
        }
    }
    if height == -1
        && width == 2 * m as i64 + 1
        && fb_prime_check(word, width, 2 * k + 1, -1)
    {
        return Ok(QComponent::Deep);
    }
    Err(Error::FamilyMismatch(format!("\"{word}\" is not in Q'({m},{k})")))
}

/// Q*(m1,k) = Q′(m1,k) without its widest height-0 component FB′₀(m1, 2k+1).
///
/// For k = 0 there is no height-0 component to remove; instead the excluded
/// ideals are exactly the ones whose walk ends with a down step, so the
/// family is the U/D words of FB′₋₁(m1+½, 1) that end with an up step.
pub fn q_star_family(m1: u32, k: u32, word: &PathWord) -> Result<QComponent> {
    let component = q_prime_family(m1, k, word)?;
    if k == 0 {
        if word.steps().last() != Some(&Step::Up) {
            return Err(Error::FamilyMismatch(format!(
                "\"{word}\" does not end with an up step, so it is outside Q*({m1},0)"
            )));
        }
        return Ok(component);
    }
    match component {
        QComponent::Flat { i: 0 } => Err(Error::FamilyMismatch(format!(
            "\"{word}\" lies in FB'_0({m1}, {}) which Q*({m1},{k}) excludes",
            2 * k + 1
        ))),
        other => Ok(other),
    }
}

fn family_union(
    flats: impl Iterator<Item = i64>,
    deep_width: i64,
    kparam: u32,
    limit: &SearchLimit,
) -> Result<Vec<PathWord>> {
    let mut out = Vec::new();
    for w in flats {
        if w < 0 {
            continue;
        }
        out.extend(enumerate(&FamilySpec::fb_prime(w, kparam, 0), limit)?);
    }
    out.extend(enumerate(&FamilySpec::fb_prime(deep_width, kparam, -1), limit)?);
    Ok(out)
}

pub fn enumerate_q(m: u32, k: u32, limit: &SearchLimit) -> Result<Vec<PathWord>> {
    let flats = (0..=k as i64 - 2).map(|i| 2 * (m as i64 - i));
    family_union(flats, 2 * (m as i64 + 1), 2 * k, limit)
}

pub fn enumerate_q_prime(m: u32, k: u32, limit: &SearchLimit) -> Result<Vec<PathWord>> {
    let flats = (0..=k as i64 - 1).map(|i| 2 * (m as i64 - i));
    family_union(flats, 2 * m as i64 + 1, 2 * k + 1, limit)
}

pub fn enumerate_q_star(m1: u32, k: u32, limit: &SearchLimit) -> Result<Vec<PathWord>> {
    let flats = (1..=k as i64 - 1).map(|i| 2 * (m1 as i64 - i));
    let mut words = family_union(flats, 2 * m1 as i64 + 1, 2 * k + 1, limit)?;
    if k == 0 {
        words.retain(|w| w.steps().last() == Some(&Step::Up));
    }
    Ok(words)
}

// ---------------------------------------------------------------------------
// α and β
// ---------------------------------------------------------------------------

fn split_at_vertex(word: &PathWord, idx: usize) -> (PathWord, PathWord) {
    let k = word.kparam();
    let a = PathWord::new(word.steps()[..idx].to_vec(), k).expect("valid steps");
    let b = PathWord::new(word.steps()[idx..].to_vec(), k).expect("valid steps");
    (a, b)
}

/// α: free paths of height 0 → ballot paths of even height. Splits at the
/// leftmost lowest vertex a into P = P¹P² and returns P²(P¹)^rc.
pub fn alpha(word: &PathWord) -> Result<PathWord> {
    let (_, height, _) = word.profile();
    if height != 0 {
        return Err(Error::FamilyMismatch(format!(
            "alpha expects height 0, got {height}"
        )));
    }
    let verts = word.vertices();
    let min_y = verts.iter().map(|v| v.1).min().unwrap();
    let split = verts.iter().position(|v| v.1 == min_y).unwrap();
    let (p1, p2) = split_at_vertex(word, split);
    let out = p2.concat(&p1.reverse_complement());
    debug_assert!(out.profile().2 >= 0 && out.final_height() % 2 == 0);
    Ok(out)
}

/// α′: splits a ballot path of height 2ℓ at its rightmost vertex on y = ℓ
/// into Q¹Q² and returns (Q²)^rc Q¹.
pub fn alpha_inv(word: &PathWord) -> Result<PathWord> {
    let (_, height, min) = word.profile();
    if min < 0 || height < 0 || height % 2 != 0 {
        return Err(Error::FamilyMismatch(format!(
            "alpha_inv expects a ballot path of even height, got height {height}"
        )));
    }
    let l = height / 2;
    let verts = word.vertices();
    let split = verts
        .iter()
        .rposition(|v| v.1 == l)
        .ok_or_else(|| Error::Internal("ballot path misses an intermediate level".into()))?;
    let (q1, q2) = split_at_vertex(word, split);
    Ok(q2.reverse_complement().concat(&q1))
}

/// β: free paths of height −1 → ballot paths of odd height. Splits at the
/// rightmost vertex on the x-axis into P¹P² and returns α(P¹)(P²)^c.
pub fn beta(word: &PathWord) -> Result<PathWord> {
    let (_, height, _) = word.profile();
    if height != -1 {
        return Err(Error::FamilyMismatch(format!(
            "beta expects height -1, got {height}"
        )));
    }
    let verts = word.vertices();
    let split = verts.iter().rposition(|v| v.1 == 0).unwrap();
    let (p1, p2) = split_at_vertex(word, split);
    let out = alpha(&p1)?.concat(&p2.complement());
    debug_assert!(out.profile().2 >= 0 && out.final_height() % 2 == 1);
    Ok(out)
}

/// β′: splits a ballot path of height 2ℓ+1 at its rightmost vertex on
/// y = 2ℓ into Q¹Q² and returns α′(Q¹)(Q²)^c.
pub fn beta_inv(word: &PathWord) -> Result<PathWord> {
    let (_, height, min) = word.profile();
    if min < 0 || height < 0 || height % 2 != 1 {
        return Err(Error::FamilyMismatch(format!(
            "beta_inv expects a ballot path of odd height, got height {height}"
        )));
    }
    let verts = word.vertices();
    let split = verts
        .iter()
        .rposition(|v| v.1 == height - 1)
        .ok_or_else(|| Error::Internal("ballot path misses an intermediate level".into()))?;
    let (q1, q2) = split_at_vertex(word, split);
    Ok(alpha_inv(&q1)?.concat(&q2.complement()))
}

// ---------------------------------------------------------------------------
// δ, γ, η: Q-families to symmetric Dyck words
// ---------------------------------------------------------------------------

fn push_h(steps: &mut Vec<Step>, len: i64) {
    debug_assert!(len >= 0);
    if len > 0 {
        steps.push(Step::Horiz(len as u32));
    }
}

/// left · middle · left^rc
fn sandwich(left: &PathWord, middle: Vec<Step>, kparam: u32) -> PathWord {
    let mid = PathWord::new(middle, kparam).expect("valid middle");
    left.concat(&mid).concat(&left.reverse_complement())
}

fn split_first(word: &PathWord) -> (Step, PathWord) {
    let first = word.steps()[0];
    let rest = PathWord::new(word.steps()[1..].to_vec(), word.kparam()).expect("valid steps");
    (first, rest)
}

fn prepend(step: Step, word: &PathWord) -> PathWord {
    let mut steps = Vec::with_capacity(word.len() + 1);
    steps.push(step);
    steps.extend_from_slice(word.steps());
    PathWord::new(steps, word.kparam()).expect("valid steps")
}

fn check_sd(word: &PathWord, s2: i64, kparam: u32, context: &str) -> Result<()> {
    if matches(word, &FamilySpec::dyck(s2, kparam)) && word.is_symmetric() {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "{context} produced \"{word}\" outside the symmetric Dyck family of width {s2} half-units"
        )))
    }
}

/// δ: Q(m,k) → SD(2m, 2k).
pub fn delta(m: u32, k: u32, word: &PathWord) -> Result<PathWord> {
    let fam = q_family(m, k, word)?;
    let kp = 2 * k;
    let ki = k as i64;
    let out = if word.is_empty() {
        // whole word is the even middle H_{2m}; only reachable when m ≤ k−2
        let mut steps = Vec::new();
        push_h(&mut steps, 2 * m as i64);
        PathWord::new(steps, kp)?
    } else {
        let (first, rest) = split_first(word);
        match (fam, first) {
            (QComponent::Flat { i }, Step::Horiz(l)) => {
                let a = alpha(&rest)?;
                let mut mid = vec![Step::Horiz(l)];
                push_h(&mut mid, 2 * i as i64);
                mid.push(Step::Horiz(l));
                sandwich(&a, mid, kp)
            }
            (QComponent::Flat { i }, Step::Down) => {
                let b = beta(&rest.complement())?;
                let mut mid = vec![Step::Down];
                push_h(&mut mid, 2 * i as i64);
                mid.push(Step::Up);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Horiz(l)) if (l as i64) <= ki => {
                let b = beta(&rest)?;
                let mut mid = Vec::new();
                push_h(&mut mid, 2 * l as i64 - 2);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Horiz(l)) => {
                let b = beta(&rest)?;
                let mut mid = vec![Step::Up];
                push_h(&mut mid, 2 * (l as i64 - ki - 1));
                mid.push(Step::Down);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Down) => {
                let a = alpha(&rest)?;
                let mut mid = Vec::new();
                push_h(&mut mid, 2 * ki - 2);
                sandwich(&a, mid, kp)
            }
            (_, Step::Up) => unreachable!("family check rejects up starts"),
        }
    };
    check_sd(&out, 4 * m as i64, kp, "delta")?;
    Ok(out)
}

/// δ′: SD(2m, 2k) → Q(m,k).
pub fn delta_inv(m: u32, k: u32, word: &PathWord) -> Result<PathWord> {
    if !matches(word, &FamilySpec::dyck(4 * m as i64, 2 * k)) || !word.is_symmetric() {
        return Err(Error::FamilyMismatch(format!(
            "\"{word}\" is not a symmetric Dyck word of width {}",
            2 * m
        )));
    }
    let kp = 2 * k;
    let ki = k as i64;
    let steps = word.steps();
    let n = steps.len();
    if n == 0 {
        return Err(Error::FamilyMismatch("empty Dyck word has width 0".into()));
    }
    let out = if n % 2 == 1 {
        let c = n / 2;
        let qp = PathWord::new(steps[..c].to_vec(), kp)?;
        let Step::Horiz(big) = steps[c] else {
            return Err(Error::Internal(
                "central step of a symmetric word must be horizontal".into(),
            ));
        };
        let big = big as i64;
        if big % 2 != 0 {
            return Err(Error::Internal(
                "odd central horizontal in an even-parameter family".into(),
            ));
        }
        if qp.final_height().rem_euclid(2) == 1 {
            // middle H_{2i} over an odd-height half
            prepend(Step::Horiz((big / 2 + 1) as u32), &beta_inv(&qp)?)
        } else if big == 2 * ki - 2 {
            prepend(Step::Down, &alpha_inv(&qp)?)
        } else if qp.is_empty() {
            PathWord::empty(kp)
        } else {
            let flank = *qp.steps().last().unwrap();
            let q = PathWord::new(qp.steps()[..qp.len() - 1].to_vec(), kp)?;
            match flank {
                Step::Horiz(l) => prepend(Step::Horiz(l), &alpha_inv(&q)?),
                Step::Down => prepend(Step::Down, &beta_inv(&q)?.complement()),
                Step::Up => prepend(Step::Horiz((ki + 1 + big / 2) as u32), &beta_inv(&q)?),
            }
        }
    } else {
        let qp = PathWord::new(steps[..n / 2].to_vec(), kp)?;
        if qp.final_height().rem_euclid(2) == 1 {
            prepend(Step::Horiz(1), &beta_inv(&qp)?)
        } else if k == 1 {
            // H_{2k−2} degenerates to the empty middle when k = 1
            prepend(Step::Down, &alpha_inv(&qp)?)
        } else {
            let flank = *qp.steps().last().unwrap();
            let q = PathWord::new(qp.steps()[..qp.len() - 1].to_vec(), kp)?;
            match flank {
                Step::Horiz(l) => prepend(Step::Horiz(l), &alpha_inv(&q)?),
                Step::Down => prepend(Step::Down, &beta_inv(&q)?.complement()),
                Step::Up => prepend(Step::Horiz((ki + 1) as u32), &beta_inv(&q)?),
            }
        }
    };
    q_family(m, k, &out)
        .map_err(|e| Error::Internal(format!("delta_inv left the Q family: {e}")))?;
    Ok(out)
}

/// γ: Q′(m,k) → SD(2m, 2k+1).
pub fn gamma(m: u32, k: u32, word: &PathWord) -> Result<PathWord> {
    let fam = q_prime_family(m, k, word)?;
    let kp = 2 * k + 1;
    let ki = k as i64;
    let out = if word.is_empty() {
        let mut steps = Vec::new();
        push_h(&mut steps, 2 * m as i64);
        PathWord::new(steps, kp)?
    } else {
        let (first, rest) = split_first(word);
        match (fam, first) {
            (QComponent::Flat { i }, Step::Horiz(l)) => {
                let a = alpha(&rest)?;
                let mut mid = vec![Step::Horiz(l)];
                push_h(&mut mid, 2 * i as i64);
                mid.push(Step::Horiz(l));
                sandwich(&a, mid, kp)
            }
            (QComponent::Flat { i }, Step::Down) => {
                let b = beta(&rest.complement())?;
                let mut mid = vec![Step::Down];
                push_h(&mut mid, 2 * i as i64);
                mid.push(Step::Up);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Horiz(l)) if (l as i64) <= ki => {
                let b = beta(&rest)?;
                sandwich(&b, vec![Step::Horiz(2 * l - 1)], kp)
            }
            (QComponent::Deep, Step::Horiz(l)) => {
                let b = beta(&rest)?;
                let mut mid = vec![Step::Up];
                push_h(&mut mid, 2 * (l as i64 - ki - 1));
                mid.push(Step::Down);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Down) => {
                let a = alpha(&rest)?;
                let mut mid = Vec::new();
                push_h(&mut mid, 2 * k as i64);
                sandwich(&a, mid, kp)
            }
            (_, Step::Up) => unreachable!("family check rejects up starts"),
        }
    };
    check_sd(&out, 4 * m as i64, kp, "gamma")?;
    Ok(out)
}

/// γ′: SD(2m, 2k+1) → Q′(m,k).
pub fn gamma_inv(m: u32, k: u32, word: &PathWord) -> Result<PathWord> {
    let kp = 2 * k + 1;
    if !matches(word, &FamilySpec::dyck(4 * m as i64, kp)) || !word.is_symmetric() {
        return Err(Error::FamilyMismatch(format!(
            "\"{word}\" is not a symmetric Dyck word of width {}",
            2 * m
        )));
    }
    let ki = k as i64;
    let steps = word.steps();
    let n = steps.len();
    if n == 0 {
        return Err(Error::FamilyMismatch("empty Dyck word has width 0".into()));
    }
    let out = if n % 2 == 1 {
        let c = n / 2;
        let qp = PathWord::new(steps[..c].to_vec(), kp)?;
        let Step::Horiz(big) = steps[c] else {
            return Err(Error::Internal(
                "central step of a symmetric word must be horizontal".into(),
            ));
        };
        let big = big as i64;
        if big % 2 == 1 {
            // odd middle H_{2i−1} over an odd-height half
            prepend(Step::Horiz(((big + 1) / 2) as u32), &beta_inv(&qp)?)
        } else if big == 2 * ki {
            prepend(Step::Down, &alpha_inv(&qp)?)
        } else if qp.is_empty() {
            PathWord::empty(kp)
        } else {
            let flank = *qp.steps().last().unwrap();
            let q = PathWord::new(qp.steps()[..qp.len() - 1].to_vec(), kp)?;
            match flank {
                Step::Horiz(l) => prepend(Step::Horiz(l), &alpha_inv(&q)?),
                Step::Down => prepend(Step::Down, &beta_inv(&q)?.complement()),
                Step::Up => prepend(Step::Horiz((ki + 1 + big / 2) as u32), &beta_inv(&q)?),
            }
        }
    } else {
        // even length: the central pair flanks an empty middle H_0
        let qp = PathWord::new(steps[..n / 2].to_vec(), kp)?;
        if k == 0 {
            // H_{2k} degenerates to the empty middle; only case (v) exists
            prepend(Step::Down, &alpha_inv(&qp)?)
        } else {
            let flank = *qp.steps().last().unwrap();
            let q = PathWord::new(qp.steps()[..qp.len() - 1].to_vec(), kp)?;
            match flank {
                Step::Horiz(l) => prepend(Step::Horiz(l), &alpha_inv(&q)?),
                Step::Down => prepend(Step::Down, &beta_inv(&q)?.complement()),
                Step::Up => prepend(Step::Horiz((ki + 1) as u32), &beta_inv(&q)?),
            }
        }
    };
    q_prime_family(m, k, &out)
        .map_err(|e| Error::Internal(format!("gamma_inv left the Q' family: {e}")))?;
    Ok(out)
}

/// η: Q*(m+1,k) → SD(2m+1, 2k+1). `m` is the smaller parameter: the domain
/// family is built over m+1.
pub fn eta(m: u32, k: u32, word: &PathWord) -> Result<PathWord> {
    let m1 = m + 1;
    let fam = q_star_family(m1, k, word)?;
    let kp = 2 * k + 1;
    let ki = k as i64;
    if k == 0 {
        // pure U/D family: the word is D·mid·U and the image is the mirror
        // doubling of β(mid)
        let mid = PathWord::new(word.steps()[1..word.len() - 1].to_vec(), kp)?;
        let out = sandwich(&beta(&mid)?, Vec::new(), kp);
        check_sd(&out, 2 * (2 * m as i64 + 1), kp, "eta")?;
        return Ok(out);
    }
    let out = if word.is_empty() {
        // i = m+1 component; middle H_{2i−1} alone
        let mut steps = Vec::new();
        push_h(&mut steps, 2 * m as i64 + 1);
        PathWord::new(steps, kp)?
    } else {
        let (first, rest) = split_first(word);
        match (fam, first) {
            (QComponent::Flat { i }, Step::Horiz(l)) => {
                let a = alpha(&rest)?;
                let mut mid = vec![Step::Horiz(l)];
                push_h(&mut mid, 2 * i as i64 - 1);
                mid.push(Step::Horiz(l));
                sandwich(&a, mid, kp)
            }
            (QComponent::Flat { i }, Step::Down) => {
                let b = beta(&rest.complement())?;
                let mut mid = vec![Step::Down];
                push_h(&mut mid, 2 * i as i64 - 1);
                mid.push(Step::Up);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Horiz(l)) if (l as i64) <= ki + 1 => {
                let b = beta(&rest)?;
                let mut mid = Vec::new();
                push_h(&mut mid, 2 * l as i64 - 2);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Horiz(l)) => {
                let b = beta(&rest)?;
                let mut mid = vec![Step::Up];
                push_h(&mut mid, 2 * (l as i64 - ki - 1) - 1);
                mid.push(Step::Down);
                sandwich(&b, mid, kp)
            }
            (QComponent::Deep, Step::Down) => {
                let a = alpha(&rest)?;
                sandwich(&a, vec![Step::Horiz(2 * k - 1)], kp)
            }
            (_, Step::Up) => unreachable!("family check rejects up starts"),
        }
    };
    check_sd(&out, 2 * (2 * m as i64 + 1), kp, "eta")?;
    Ok(out)
}

/// η′: SD(2m+1, 2k+1) → Q*(m+1,k).
pub fn eta_inv(m: u32, k: u32, word: &PathWord) -> Result<PathWord> {
    let kp = 2 * k + 1;
    if !matches(word, &FamilySpec::dyck(2 * (2 * m as i64 + 1), kp)) || !word.is_symmetric() {
        return Err(Error::FamilyMismatch(format!(
            "\"{word}\" is not a symmetric Dyck word of width {}",
            2 * m + 1
        )));
    }
    let ki = k as i64;
    let steps = word.steps();
    let n = steps.len();
    if n == 0 {
        return Err(Error::FamilyMismatch("empty Dyck word has width 0".into()));
    }
    let out = if n % 2 == 1 {
        let c = n / 2;
        let qp = PathWord::new(steps[..c].to_vec(), kp)?;
        let Step::Horiz(big) = steps[c] else {
            return Err(Error::Internal(
                "central step of a symmetric word must be horizontal".into(),
            ));
        };
        let big = big as i64;
        if big % 2 == 0 {
            // even middle H_{2i} over an odd-height half
            prepend(Step::Horiz((big / 2 + 1) as u32), &beta_inv(&qp)?)
        } else if big == 2 * ki - 1 {
            prepend(Step::Down, &alpha_inv(&qp)?)
        } else if qp.is_empty() {
            PathWord::empty(kp)
        } else {
            let flank = *qp.steps().last().unwrap();
            let q = PathWord::new(qp.steps()[..qp.len() - 1].to_vec(), kp)?;
            match flank {
                Step::Horiz(l) => prepend(Step::Horiz(l), &alpha_inv(&q)?),
                Step::Down => prepend(Step::Down, &beta_inv(&q)?.complement()),
                Step::Up => {
                    prepend(Step::Horiz((ki + 1 + (big + 1) / 2) as u32), &beta_inv(&q)?)
                }
            }
        }
    } else {
        // even length: middle H_0 with an odd-height half
        let qp = PathWord::new(steps[..n / 2].to_vec(), kp)?;
        if k == 0 {
            // invert the mirror doubling: D·β⁻¹(half)·U
            let mut mid = beta_inv(&qp)?.steps().to_vec();
            mid.insert(0, Step::Down);
            mid.push(Step::Up);
            PathWord::new(mid, kp)?
        } else {
            prepend(Step::Horiz(1), &beta_inv(&qp)?)
        }
    };
    q_star_family(m + 1, k, &out)
        .map_err(|e| Error::Internal(format!("eta_inv left the Q* family: {e}")))?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// ξ: symmetric width bump
// ---------------------------------------------------------------------------

/// Splits a symmetric word as Q H_mid Q^rc around the center line; returns
/// (step index of the middle, its length, whether a middle step exists).
/// Half-unit widths are always even, so the center coordinate is exact.
fn central_decomposition(word: &PathWord) -> Result<(usize, u32, bool)> {
    let verts = word.vertices();
    let center = verts.last().unwrap().0 / 2;
    if let Some(idx) = verts.iter().position(|&(x, _)| x == center) {
        // vertex on the center line: middle is H_0
        return Ok((idx, 0, false));
    }
    for (idx, w) in verts.windows(2).enumerate() {
        let (x0, _) = w[0];
        let (x1, _) = w[1];
        if x0 < center && center < x1 {
            match word.steps()[idx] {
                Step::Horiz(l) if x0 + x1 == 2 * center => return Ok((idx, l, true)),
                _ => {
                    return Err(Error::InvalidWord(format!(
                        "\"{word}\" has no centered middle step"
                    )))
                }
            }
        }
    }
    Err(Error::InvalidWord(format!("\"{word}\" has no central decomposition")))
}

/// ξ: SD(2m, 2k) → SD(2m+1, 2k); the even middle H_{2ℓ} becomes H_{2ℓ+1}.
pub fn xi(word: &PathWord) -> Result<PathWord> {
    let kp = word.kparam();
    let (width, height, min) = word.profile();
    if kp % 2 != 0 || width % 4 != 0 || height != 0 || min < 0 || !word.is_symmetric() {
        return Err(Error::FamilyMismatch(format!(
            "xi expects a symmetric Dyck word of even width and even family parameter, got \"{word}\""
        )));
    }
    let (idx, mid, present) = central_decomposition(word)?;
    if present && mid % 2 != 0 {
        return Err(Error::InvalidWord(
            "middle step of an even-width symmetric word must be even".into(),
        ));
    }
    let mut steps = word.steps().to_vec();
    if present {
        steps[idx] = Step::Horiz(mid + 1);
    } else {
        steps.insert(idx, Step::Horiz(1));
    }
    let out = PathWord::new(steps, kp)?;
    check_sd(&out, width + 2, kp, "xi")?;
    Ok(out)
}

/// ξ′: SD(2m+1, 2k) → SD(2m, 2k); decrements the odd middle.
pub fn xi_inv(word: &PathWord) -> Result<PathWord> {
    let kp = word.kparam();
    let (width, height, min) = word.profile();
    if kp % 2 != 0 || width % 2 != 0 || width % 4 == 0 || height != 0 || min < 0
        || !word.is_symmetric()
    {
        return Err(Error::FamilyMismatch(format!(
            "xi_inv expects a symmetric Dyck word of odd width and even family parameter, got \"{word}\""
        )));
    }
    let (idx, mid, present) = central_decomposition(word)?;
    if !present || mid % 2 != 1 {
        return Err(Error::InvalidWord(
            "odd-width symmetric word must have an odd middle step".into(),
        ));
    }
    let mut steps = word.steps().to_vec();
    if mid == 1 {
        steps.remove(idx);
    } else {
        steps[idx] = Step::Horiz(mid - 1);
    }
    let out = PathWord::new(steps, kp)?;
    check_sd(&out, width - 2, kp, "xi_inv")?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// End-to-end composites
// ---------------------------------------------------------------------------

/// Full chain: a self-conjugate (s, s+1, …, s+k)-core to its symmetric
/// (s,k)-Dyck word.
pub fn core_to_path(s: u32, k: u32, lambda: &Partition) -> Result<PathWord> {
    if s < 2 || k < 1 {
        return Err(Error::FamilyMismatch(format!(
            "parameters s={s}, k={k} out of range"
        )));
    }
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate);
    }
    let moduli: Vec<u64> = (s..=s + k).map(u64::from).collect();
    if !lambda.is_simultaneous_core(&moduli)? {
        return Err(Error::FamilyMismatch(format!(
            "{lambda} is not a ({s}, …, {})-core",
            s + k
        )));
    }
    let md = lambda.diagonal_hooks()?;
    let mut ideal: Vec<PlanarPoint> = md
        .values()
        .iter()
        .map(|&h| chi(s, k, h))
        .collect::<Result<_>>()?;
    sort_planar_ideal(&mut ideal);
    match (s % 2, k % 2) {
        (0, 0) => {
            let (m, kk) = (s / 2, k / 2);
            delta(m, kk, &phi(m, kk, &ideal)?)
        }
        (1, 0) => {
            // P'(2m+1, 2kk) is the same poset as P'(2m, 2kk)
            let (m, kk) = ((s - 1) / 2, k / 2);
            xi(&delta(m, kk, &phi(m, kk, &ideal)?)?)
        }
        (0, 1) => {
            let (m, kk) = (s / 2, (k - 1) / 2);
            gamma(m, kk, &psi(m, kk, &ideal)?)
        }
        (1, 1) => {
            // the ideal avoids (m+1, 0), so it reads as an ideal of
            // P'(2m+2, 2kk+1) and ψ lands in Q*(m+1, kk)
            let (m, kk) = ((s - 1) / 2, (k - 1) / 2);
            eta(m, kk, &psi(m + 1, kk, &ideal)?)
        }
        _ => unreachable!(),
    }
}

/// Inverse chain: a symmetric (s,k)-Dyck word back to its core partition.
pub fn path_to_core(s: u32, k: u32, word: &PathWord) -> Result<Partition> {
    if s < 2 || k < 1 {
        return Err(Error::FamilyMismatch(format!(
            "parameters s={s}, k={k} out of range"
        )));
    }
    let ideal = match (s % 2, k % 2) {
        (0, 0) => {
            let (m, kk) = (s / 2, k / 2);
            phi_inv(m, kk, &delta_inv(m, kk, word)?)?
        }
        (1, 0) => {
            let (m, kk) = ((s - 1) / 2, k / 2);
            phi_inv(m, kk, &delta_inv(m, kk, &xi_inv(word)?)?)?
        }
        (0, 1) => {
            let (m, kk) = (s / 2, (k - 1) / 2);
            psi_inv(m, kk, &gamma_inv(m, kk, word)?)?
        }
        (1, 1) => {
            let (m, kk) = ((s - 1) / 2, (k - 1) / 2);
            psi_inv(m + 1, kk, &eta_inv(m, kk, word)?)?
        }
        _ => unreachable!(),
    };
    let md = OddHookSet::new(
        ideal
            .iter()
            .map(|&p| chi_inv(s, k, p))
            .collect::<Result<Vec<_>>>()?,
    )
    .map_err(|e| Error::Internal(format!("recovered ideal is not a hook set: {e}")))?;
    let lambda = from_diagonal_hooks(&md);
    let moduli: Vec<u64> = (s..=s + k).map(u64::from).collect();
    if !lambda.is_simultaneous_core(&moduli)? {
        return Err(Error::Internal(format!(
            "recovered partition {lambda} fails the core check"
        )));
    }
    Ok(lambda)
}
