//! One-dimensional walks on Z with unit steps, their statistics, and the
//! `U`/`D`/`N<k>` text encoding.
//!
//! A walk always starts at 0. Heights are cached when the walk is built, so
//! every statistic below is a slice scan at worst. Walks are immutable: the
//! operators in [`crate::rootops`] return new walks.

mod nd;

pub use nd::{format_walk_nd, parse_step_set, parse_walk_nd, StepNd, StepSet, WalkNd};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("UnknownCharacter: unexpected character {ch:?} at byte {pos}")]
    UnknownCharacter { ch: char, pos: usize },
    #[error("NeutralKindOutOfRange: neutral kind {kind} needs t > {kind}, alphabet has t = {t}")]
    NeutralKindOutOfRange { kind: u32, t: u32 },
    #[error("MalformedStep: {0}")]
    MalformedStep(String),
    #[error("StepNotInSet: step {0} is not a member of the step set")]
    StepNotInSet(String),
    #[error("NotClosed: step set is not closed under negating coordinate {coord} of {step}")]
    NotClosed { step: String, coord: usize },
    #[error("DimensionMismatch: expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// A unit step of a walk on Z.
///
/// Neutral steps carry a kind index; kinds are distinguished when counting
/// (there are `t` of them in an alphabet) but never move the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    Neutral(u32),
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Neutral(_) => 0,
        }
    }

    /// Reverses the direction of a non-neutral step. Neutral steps are fixed.
    pub fn negate(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
            n @ Step::Neutral(_) => n,
        }
    }

    pub fn is_neutral(self) -> bool {
        matches!(self, Step::Neutral(_))
    }
}

/// Number `t` of distinguished neutral-step kinds. `t = 0` gives binary
/// walks, `t = 1` ternary (Motzkin-type) walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Alphabet {
    pub t: u32,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { t: 0 };
    pub const TERNARY: Alphabet = Alphabet { t: 1 };

    pub fn new(t: u32) -> Self {
        Alphabet { t }
    }

    /// All steps of the alphabet in enumeration order: `U < D < N0 < N1 < …`.
    pub fn steps(self) -> Vec<Step> {
        let mut steps = vec![Step::Up, Step::Down];
        steps.extend((0..self.t).map(Step::Neutral));
        steps
    }

    pub fn size(self) -> usize {
        2 + self.t as usize
    }

    pub fn contains(self, step: Step) -> bool {
        match step {
            Step::Neutral(k) => k < self.t,
            _ => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStats {
    pub length: usize,
    pub end: i64,
    pub min: i64,
    pub depth: i64,
    pub neutral_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub positive: bool,
    pub recurrent: bool,
    pub almost_recurrent: bool,
}

/// A finite walk on Z starting at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk1D {
    steps: Vec<Step>,
    heights: Vec<i64>,
    alphabet: Alphabet,
}

impl Walk1D {
    pub fn new(steps: Vec<Step>, alphabet: Alphabet) -> Result<Self, WalkError> {
        if let Some(&Step::Neutral(kind)) = steps.iter().find(|s| !alphabet.contains(**s)) {
            return Err(WalkError::NeutralKindOutOfRange { kind, t: alphabet.t });
        }
        Ok(Self::from_steps_unchecked(steps, alphabet))
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self::from_steps_unchecked(Vec::new(), alphabet)
    }

    /// Builds a walk whose neutral kinds are already known to fit `alphabet`.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>, alphabet: Alphabet) -> Self {
        debug_assert!(steps.iter().all(|s| alphabet.contains(*s)));
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h = 0;
        heights.push(h);
        for s in &steps {
            h += s.delta();
            heights.push(h);
        }
        Walk1D { steps, heights, alphabet }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Heights `h_0 = 0, h_1, …, h_n`.
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> i64 {
        *self.heights.last().expect("heights is never empty")
    }

    pub fn min(&self) -> i64 {
        *self.heights.iter().min().expect("heights is never empty")
    }

    pub fn max(&self) -> i64 {
        *self.heights.iter().max().expect("heights is never empty")
    }

    pub fn depth(&self) -> i64 {
        -self.min()
    }

    pub fn neutral_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_neutral()).count()
    }

    pub fn stats(&self) -> WalkStats {
        let min = self.min();
        WalkStats { length: self.len(), end: self.end(), min, depth: -min, neutral_count: self.neutral_count() }
    }

    pub fn is_positive(&self) -> bool {
        self.min() == 0
    }

    pub fn is_recurrent(&self) -> bool {
        self.end() == 0
    }

    pub fn is_almost_recurrent(&self) -> bool {
        matches!(self.end(), 0 | 1)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            positive: self.is_positive(),
            recurrent: self.is_recurrent(),
            almost_recurrent: self.is_almost_recurrent(),
        }
    }

    /// True when no step is neutral.
    pub fn is_binary(&self) -> bool {
        self.steps.iter().all(|s| !s.is_neutral())
    }

    /// Copy of the walk with the steps at `positions` negated.
    pub fn with_flipped(&self, positions: &[usize]) -> Walk1D {
        let mut steps = self.steps.clone();
        for &p in positions {
            steps[p] = steps[p].negate();
        }
        Walk1D::from_steps_unchecked(steps, self.alphabet)
    }

    /// Smallest time `j` with `h_j = v`.
    pub fn first_visit(&self, v: i64) -> Option<usize> {
        self.heights.iter().position(|&h| h == v)
    }

    /// Largest time `j` with `h_j = v`.
    pub fn last_visit(&self, v: i64) -> Option<usize> {
        self.heights.iter().rposition(|&h| h == v)
    }

    /// Sub-walk made of steps `range`, re-based to start at 0.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Walk1D {
        Walk1D::from_steps_unchecked(self.steps[range].to_vec(), self.alphabet)
    }

    /// Concatenation of walks over the same alphabet.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a [Step]>, alphabet: Alphabet) -> Walk1D {
        let steps = parts.into_iter().flat_map(|p| p.iter().copied()).collect();
        Walk1D::from_steps_unchecked(steps, alphabet)
    }
}

/// Parses the `U`/`D`/`N<k>` encoding. A bare `N` means `N0`.
pub fn parse_walk(text: &str, alphabet: Alphabet) -> Result<Walk1D, WalkError> {
    let bytes = text.as_bytes();
    let mut steps = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'U' => {
                steps.push(Step::Up);
                i += 1;
            }
            b'D' => {
                steps.push(Step::Down);
                i += 1;
            }
            b'N' => {
                let start = i + 1;
                let mut j = start;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let kind = if j == start {
                    0
                } else {
                    text[start..j].parse::<u32>().map_err(|_| {
                        WalkError::MalformedStep(format!("neutral kind {:?} out of range", &text[start..j]))
                    })?
                };
                if kind >= alphabet.t {
                    return Err(WalkError::NeutralKindOutOfRange { kind, t: alphabet.t });
                }
                steps.push(Step::Neutral(kind));
                i = j;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(WalkError::UnknownCharacter { ch, pos: i });
            }
        }
    }
    Ok(Walk1D::from_steps_unchecked(steps, alphabet))
}

/// Canonical encoding: neutral steps are a bare `N` when `t <= 1`, `N<k>`
/// otherwise.
pub fn format_walk(walk: &Walk1D) -> String {
    walk.to_string()
}

impl fmt::Display for Walk1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match s {
                Step::Up => f.write_str("U")?,
                Step::Down => f.write_str("D")?,
                Step::Neutral(k) if self.alphabet.t <= 1 => {
                    debug_assert_eq!(*k, 0);
                    f.write_str("N")?
                }
                Step::Neutral(k) => write!(f, "N{k}")?,
            }
        }
        Ok(())
    }
}

/// Parses a binary walk.
impl FromStr for Walk1D {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_walk(s, Alphabet::BINARY)
    }
}
