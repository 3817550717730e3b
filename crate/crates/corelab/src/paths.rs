//! Lattice-path words: ballot, Dyck, free, and symmetric families.
//!
//! A path is a *word* of steps, not a point trace: `H1 H2` and `H3` cover the
//! same segment but are different paths. Every x-quantity is measured in
//! half-units so that odd family parameters stay in exact integers: under
//! family parameter `k`, an up or down step is `k` half-units wide and a
//! horizontal step `H_ℓ` is `2ℓ` half-units wide. A width of `s` real units
//! is `2s` half-units.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::SearchLimit;

/// One step. Derived ordering `Up < Down < Horiz(1) < Horiz(2) < …` is the
/// enumeration order used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    Horiz(u32),
}

impl Step {
    pub fn width_hu(&self, kparam: u32) -> i64 {
        match self {
            Step::Up | Step::Down => kparam as i64,
            Step::Horiz(l) => 2 * *l as i64,
        }
    }

    pub fn rise(&self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Horiz(_) => 0,
        }
    }

    /// U ↔ D swap; horizontal steps are fixed.
    pub fn complement(&self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
            Step::Horiz(l) => Step::Horiz(*l),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up => write!(f, "U"),
            Step::Down => write!(f, "D"),
            Step::Horiz(l) => write!(f, "H{l}"),
        }
    }
}

/// A path word under a fixed family parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    steps: Vec<Step>,
    kparam: u32,
}

impl PathWord {
    /// Zero-length horizontal steps are not steps; reject them here so that
    /// every word is x-monotone.
    pub fn new(steps: Vec<Step>, kparam: u32) -> Result<Self> {
        if kparam == 0 {
            return Err(Error::InvalidWord("family parameter must be positive".into()));
        }
        if steps.iter().any(|s| matches!(s, Step::Horiz(0))) {
            return Err(Error::InvalidWord("H0 is not a step".into()));
        }
        Ok(Self { steps, kparam })
    }

    pub fn empty(kparam: u32) -> Self {
        Self { steps: Vec::new(), kparam }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn kparam(&self) -> u32 {
        self.kparam
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn width_hu(&self) -> i64 {
        self.steps.iter().map(|s| s.width_hu(self.kparam)).sum()
    }

    /// (total width in half-units, final height, minimum height).
    pub fn profile(&self) -> (i64, i64, i64) {
        let mut x = 0;
        let mut y = 0;
        let mut min = 0;
        for s in &self.steps {
            x += s.width_hu(self.kparam);
            y += s.rise();
            min = min.min(y);
        }
        (x, y, min)
    }

    pub fn final_height(&self) -> i64 {
        self.steps.iter().map(Step::rise).sum()
    }

    /// Lattice points visited, starting at (0, 0); x in half-units.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut v = Vec::with_capacity(self.steps.len() + 1);
        let mut x = 0;
        let mut y = 0;
        v.push((x, y));
        for s in &self.steps {
            x += s.width_hu(self.kparam);
            y += s.rise();
            v.push((x, y));
        }
        v
    }

    pub fn complement(&self) -> PathWord {
        PathWord {
            steps: self.steps.iter().map(Step::complement).collect(),
            kparam: self.kparam,
        }
    }

    /// Steps read right to left with U ↔ D swapped.
    pub fn reverse_complement(&self) -> PathWord {
        PathWord {
            steps: self.steps.iter().rev().map(Step::complement).collect(),
            kparam: self.kparam,
        }
    }

    /// A word is symmetric when it equals its own reverse complement; for
    /// Dyck words this is the reflection about the vertical center line.
    pub fn is_symmetric(&self) -> bool {
        *self == self.reverse_complement()
    }

    pub fn concat(&self, other: &PathWord) -> PathWord {
        debug_assert_eq!(self.kparam, other.kparam);
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        PathWord { steps, kparam: self.kparam }
    }

    /// Whitespace-separated `U` / `D` / `H<ℓ>` tokens; empty for the empty word.
    pub fn to_token_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_token_string())
    }
}

/// Parse the token grammar: `U`, `D`, `H<ℓ>`, whitespace separated.
pub fn parse_word(text: &str, kparam: u32) -> Result<PathWord> {
    let mut steps = Vec::new();
    for tok in text.split_whitespace() {
        let step = match tok {
            "U" => Step::Up,
            "D" => Step::Down,
            _ => {
                let l = tok
                    .strip_prefix('H')
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad step token {tok:?}")))?;
                Step::Horiz(l)
            }
        };
        steps.push(step);
    }
    PathWord::new(steps, kparam)
}

/// Which words belong to a path family: total width, final height, the
/// ballot constraint, and the restricted start used by the FB′ families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub width_hu: i64,
    pub kparam: u32,
    pub height: i64,
    /// Never below the x-axis.
    pub ballot: bool,
    /// First step, if any, is horizontal or down.
    pub start_down_or_horiz: bool,
}

impl FamilySpec {
    pub fn ballot(width_hu: i64, kparam: u32, height: i64) -> Self {
        Self { width_hu, kparam, height, ballot: true, start_down_or_horiz: false }
    }

    pub fn dyck(width_hu: i64, kparam: u32) -> Self {
        Self::ballot(width_hu, kparam, 0)
    }

    pub fn free(width_hu: i64, kparam: u32, height: i64) -> Self {
        Self { width_hu, kparam, height, ballot: false, start_down_or_horiz: false }
    }

    /// Free ballot paths that start with a horizontal or a down step.
    pub fn fb_prime(width_hu: i64, kparam: u32, height: i64) -> Self {
        Self { width_hu, kparam, height, ballot: false, start_down_or_horiz: true }
    }
}

/// Family membership: width, height, step legality, and the flags.
pub fn matches(w: &PathWord, f: &FamilySpec) -> bool {
    if w.kparam() != f.kparam {
        return false;
    }
    if w.steps().iter().any(|s| match s {
        Step::Horiz(l) => *l == 0 || *l >= f.kparam,
        _ => false,
    }) {
        return false;
    }
    let (width, height, min) = w.profile();
    if width != f.width_hu || height != f.height {
        return false;
    }
    if f.ballot && min < 0 {
        return false;
    }
    if f.start_down_or_horiz && matches!(w.steps().first(), Some(Step::Up)) {
        return false;
    }
    true
}

/// Every word of the family, exactly once, in lexicographic order under
/// `U < D < H1 < H2 < …`.
pub fn enumerate(f: &FamilySpec, limit: &SearchLimit) -> Result<Vec<PathWord>> {
    let mut out = Vec::new();
    let mut counter = 0u64;
    walk_family(f, limit, &mut counter, &mut |w| {
        out.push(w.clone());
        Ok(())
    })?;
    Ok(out)
}

pub fn count(f: &FamilySpec, limit: &SearchLimit) -> Result<u64> {
    let mut n = 0u64;
    let mut counter = 0u64;
    walk_family(f, limit, &mut counter, &mut |_| {
        n = n
            .checked_add(1)
            .ok_or(Error::Overflow { what: "path word count", cap: u64::MAX })?;
        Ok(())
    })?;
    Ok(n)
}

/// Symmetric (s, k)-Dyck words, by exhaustive enumeration plus the
/// reverse-complement filter.
pub fn enumerate_symmetric_dyck(s: u32, k: u32, limit: &SearchLimit) -> Result<Vec<PathWord>> {
    let f = FamilySpec::dyck(2 * s as i64, k);
    let mut out = Vec::new();
    let mut counter = 0u64;
    walk_family(&f, limit, &mut counter, &mut |w| {
        if w.is_symmetric() {
            out.push(w.clone());
        }
        Ok(())
    })?;
    Ok(out)
}

pub fn count_symmetric_dyck(s: u32, k: u32, limit: &SearchLimit) -> Result<u64> {
    let f = FamilySpec::dyck(2 * s as i64, k);
    let mut n = 0u64;
    let mut counter = 0u64;
    walk_family(&f, limit, &mut counter, &mut |w| {
        if w.is_symmetric() {
            n += 1;
        }
        Ok(())
    })?;
    Ok(n)
}

fn walk_family(
    f: &FamilySpec,
    limit: &SearchLimit,
    counter: &mut u64,
    visit: &mut dyn FnMut(&PathWord) -> Result<()>,
) -> Result<()> {
    if f.kparam == 0 || f.width_hu < 0 {
        return Ok(());
    }
    let mut word = PathWord::empty(f.kparam);
    walk_rec(f, limit, counter, &mut word, 0, 0, visit)
}

fn walk_rec(
    f: &FamilySpec,
    limit: &SearchLimit,
    counter: &mut u64,
    word: &mut PathWord,
    x: i64,
    y: i64,
    visit: &mut dyn FnMut(&PathWord) -> Result<()>,
) -> Result<()> {
    if x == f.width_hu && y == f.height {
        limit.tick(counter, "path words")?;
        visit(word)?;
    }
    // remaining width must fit the height gap at k half-units per unit rise
    let room = f.width_hu - x;
    if room <= 0 || (f.height - y).abs() * f.kparam as i64 > room {
        return Ok(());
    }
    let mut candidates: Vec<Step> = vec![Step::Up, Step::Down];
    for l in 1..f.kparam {
        candidates.push(Step::Horiz(l));
    }
    for step in candidates {
        if word.steps.is_empty() && f.start_down_or_horiz && step == Step::Up {
            continue;
        }
        let nx = x + step.width_hu(f.kparam);
        let ny = y + step.rise();
        if nx > f.width_hu {
            continue;
        }
        if f.ballot && ny < 0 {
            continue;
        }
        word.steps.push(step);
        walk_rec(f, limit, counter, word, nx, ny, visit)?;
        word.steps.pop();
    }
    Ok(())
}

/// Motzkin numbers by the standard recurrence
/// M₀ = 1, M_{n+1} = M_n + Σ_{j=0}^{n−1} M_j · M_{n−1−j}.
pub fn motzkin(n: usize) -> Result<u64> {
    let mut m = vec![1u64];
    for i in 0..n {
        let mut next = m[i];
        for j in 0..i {
            let prod = m[j]
                .checked_mul(m[i - 1 - j])
                .ok_or(Error::Overflow { what: "motzkin", cap: u64::MAX })?;
            next = next
                .checked_add(prod)
                .ok_or(Error::Overflow { what: "motzkin", cap: u64::MAX })?;
        }
        m.push(next);
    }
    Ok(m[n])
}

/// JSON form of a word whose width is a whole number of real units:
/// `{"s":10,"k":4,"steps":["U","H2","H2","H2","D"]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordJson {
    pub s: u32,
    pub k: u32,
    pub steps: Vec<String>,
}

impl WordJson {
    pub fn from_word(w: &PathWord) -> Result<Self> {
        let width = w.width_hu();
        if width % 2 != 0 {
            return Err(Error::InvalidWord(format!(
                "width {width} half-units is not a whole number of units"
            )));
        }
        Ok(Self {
            s: (width / 2) as u32,
            k: w.kparam(),
            steps: w.steps().iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn to_word(&self) -> Result<PathWord> {
        let w = parse_word(&self.steps.join(" "), self.k)?;
        if w.width_hu() != 2 * self.s as i64 {
            return Err(Error::InvalidWord(format!(
                "steps span {} half-units but s = {}",
                w.width_hu(),
                self.s
            )));
        }
        Ok(w)
    }
}
