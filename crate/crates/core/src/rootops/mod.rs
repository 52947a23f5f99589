//! Raising and lowering operators on walks, and the bijections built from
//! them.
//!
//! The raising operator reverses the down-step that first attains the global
//! minimum; the lowering operator reverses the up-step that immediately
//! follows the last attainment of the global minimum. Iterating raising
//! until the walk is positive is the same as reversing, in a single pass, the
//! down-steps that first reach -1, -2, …, -d ([`theorem1_forward`]).

pub(crate) mod multi;

pub use multi::{theorem2_forward, theorem2_inverse};

use thiserror::Error;

use crate::walks::{Step, Walk1D};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootOpError {
    #[error("MinimumIsZero: the walk never goes below 0, no down-step attains its minimum")]
    MinimumIsZero,
    #[error("NotInImage: the last visit to the minimum is not followed by an up-step")]
    NotInImage,
    #[error("BadEndpoint: walk ends at {end}, expected 0 or 1")]
    BadEndpoint { end: i64 },
    #[error("NotPositive: walk visits {min} < 0")]
    NotPositive { min: i64 },
    #[error("NotRecurrent: first factor ends at {end}, expected 0")]
    NotRecurrent { end: i64 },
    #[error("SuffixNotPositive: second factor visits {min} < 0")]
    SuffixNotPositive { min: i64 },
    #[error("SuffixOddEnd: second factor ends at odd number {end}")]
    SuffixOddEnd { end: i64 },
    #[error("NotPositiveOdd: walk ends at {end}, expected a positive odd number")]
    NotPositiveOdd { end: i64 },
    #[error("NoSuchStep: no up-step starts at 0")]
    NoSuchStep,
    #[error("AlphabetMismatch: walks use t = {left} and t = {right}")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("BadEndpoint: walk ends at {end:?}, expected a vertex of the unit cube")]
    NotInUnitCube { end: Vec<i64> },
    #[error("NotPositive: walk leaves the positive orthant in coordinate {coord}")]
    NotInOrthant { coord: usize },
}

/// Positions of the down-steps that first reach -1, -2, … in a walk given
/// by its step deltas, in order of appearance.
pub(crate) fn record_down_steps(deltas: impl IntoIterator<Item = i64>) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut h, mut low) = (0i64, 0i64);
    for (i, d) in deltas.into_iter().enumerate() {
        h += d;
        if h < low {
            debug_assert_eq!(d, -1);
            low = h;
            out.push(i);
        }
    }
    out
}

/// For each level `v` in `lo..hi` (ascending), the step following the last
/// visit to `v`. Every level must lie strictly below the final height and be
/// visited, which makes each such step an up-step.
pub(crate) fn last_departures(heights: &[i64], lo: i64, hi: i64) -> Vec<usize> {
    if hi <= lo {
        return Vec::new();
    }
    let mut out = vec![usize::MAX; (hi - lo) as usize];
    let mut missing = out.len();
    for j in (0..heights.len()).rev() {
        let h = heights[j];
        if (lo..hi).contains(&h) {
            let slot = &mut out[(h - lo) as usize];
            if *slot == usize::MAX {
                debug_assert!(j + 1 < heights.len() && heights[j + 1] == h + 1);
                *slot = j;
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(missing, 0);
    out
}

/// Reverses the down-step whose endpoint is the first attainment of the
/// global minimum.
pub fn raise(w: &Walk1D) -> Result<Walk1D, RootOpError> {
    let min = w.min();
    if min == 0 {
        return Err(RootOpError::MinimumIsZero);
    }
    let t = w.first_visit(min).expect("minimum is visited");
    debug_assert_eq!(w.steps()[t - 1], Step::Down);
    Ok(w.with_flipped(&[t - 1]))
}

/// Reverses the up-step immediately following the last attainment of the
/// global minimum. Two-sided inverse of [`raise`].
pub fn lower(w: &Walk1D) -> Result<Walk1D, RootOpError> {
    let j = w.last_visit(w.min()).expect("minimum is visited");
    match w.steps().get(j) {
        Some(Step::Up) => Ok(w.with_flipped(&[j])),
        _ => Err(RootOpError::NotInImage),
    }
}

/// Applies [`raise`] until the walk is positive; returns the walk and the
/// number of applications.
pub fn raise_fully(w: &Walk1D) -> (Walk1D, usize) {
    let mut cur = w.clone();
    let mut n = 0;
    while let Ok(next) = raise(&cur) {
        cur = next;
        n += 1;
    }
    (cur, n)
}

/// Positions reversed by [`theorem1_forward`]: the down-steps first reaching
/// -1, …, -d.
pub fn theorem1_flip_positions(w: &Walk1D) -> Result<Vec<usize>, RootOpError> {
    if !w.is_almost_recurrent() {
        return Err(RootOpError::BadEndpoint { end: w.end() });
    }
    Ok(record_down_steps(w.steps().iter().map(|s| s.delta())))
}

/// Bijection from walks ending at `e ∈ {0,1}` with depth `d` onto positive
/// walks ending at `2d + e`, preserving length and neutral steps.
pub fn theorem1_forward(w: &Walk1D) -> Result<Walk1D, RootOpError> {
    let flips = theorem1_flip_positions(w)?;
    Ok(w.with_flipped(&flips))
}

/// Inverse of [`theorem1_forward`]: with `m` the end point, reverses the
/// up-steps following the last visits to `0, 1, …, ⌊m/2⌋ - 1`.
pub fn theorem1_inverse(w: &Walk1D) -> Result<Walk1D, RootOpError> {
    let min = w.min();
    if min < 0 {
        return Err(RootOpError::NotPositive { min });
    }
    let d = w.end() / 2;
    let flips = last_departures(w.heights(), 0, d);
    Ok(w.with_flipped(&flips))
}

/// Steps of the walk in reverse order, each reversed in direction.
pub fn reverse_negate(w: &Walk1D) -> Walk1D {
    let steps = w.steps().iter().rev().map(|s| s.negate()).collect();
    Walk1D::from_steps_unchecked(steps, w.alphabet())
}

/// Applies [`lower`] to a positive walk for as long as it is defined. A
/// positive walk ending at `k` is sent to a walk ending at its global
/// minimum `-k`.
pub fn full_lower(w: &Walk1D) -> Result<Walk1D, RootOpError> {
    let min = w.min();
    if min < 0 {
        return Err(RootOpError::NotPositive { min });
    }
    let mut cur = w.clone();
    while let Ok(next) = lower(&cur) {
        cur = next;
    }
    Ok(cur)
}

/// Factorisation of a walk into Motzkin walks separated by single steps.
///
/// `motzkin` holds `2d + e + 1` factors (each re-based to start at 0) and
/// `singles` the `2d + e` separating steps: `d` down-steps followed by
/// `d + e` up-steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotzkinDecomposition {
    pub motzkin: Vec<Walk1D>,
    pub singles: Vec<Step>,
    pub depth: i64,
    pub end: i64,
}

impl MotzkinDecomposition {
    pub fn reassemble(&self) -> Walk1D {
        let alphabet = self.motzkin[0].alphabet();
        let mut steps = self.motzkin[0].steps().to_vec();
        for (s, m) in self.singles.iter().zip(&self.motzkin[1..]) {
            steps.push(*s);
            steps.extend_from_slice(m.steps());
        }
        Walk1D::from_steps_unchecked(steps, alphabet)
    }

    /// Number of down-steps among the singles.
    pub fn down_singles(&self) -> usize {
        self.singles.iter().filter(|s| **s == Step::Down).count()
    }
}

/// Positions of the steps contained in no Motzkin sub-walk: the record
/// down-steps, then the up-steps leaving each level `-d..e` for the last time.
pub fn motzkin_single_positions(w: &Walk1D) -> Vec<usize> {
    let mut singles = record_down_steps(w.steps().iter().map(|s| s.delta()));
    singles.extend(last_departures(w.heights(), w.min(), w.end()));
    singles
}

pub fn motzkin_decompose(w: &Walk1D) -> MotzkinDecomposition {
    let singles = motzkin_single_positions(w);
    let mut motzkin = Vec::with_capacity(singles.len() + 1);
    let mut start = 0;
    for &p in &singles {
        motzkin.push(w.slice(start..p));
        start = p + 1;
    }
    motzkin.push(w.slice(start..w.len()));
    MotzkinDecomposition {
        motzkin,
        singles: singles.iter().map(|&p| w.steps()[p]).collect(),
        depth: w.depth(),
        end: w.end(),
    }
}

/// `recurrent ++ U ++ suffix`. The inserted up-step is the last step of the
/// result to start at 0.
pub fn concat_with_upstep(recurrent: &Walk1D, suffix: &Walk1D) -> Result<Walk1D, RootOpError> {
    if recurrent.alphabet() != suffix.alphabet() {
        return Err(RootOpError::AlphabetMismatch { left: recurrent.alphabet().t, right: suffix.alphabet().t });
    }
    if !recurrent.is_recurrent() {
        return Err(RootOpError::NotRecurrent { end: recurrent.end() });
    }
    let min = suffix.min();
    if min < 0 {
        return Err(RootOpError::SuffixNotPositive { min });
    }
    if suffix.end() % 2 != 0 {
        return Err(RootOpError::SuffixOddEnd { end: suffix.end() });
    }
    Ok(Walk1D::concat([recurrent.steps(), &[Step::Up][..], suffix.steps()], recurrent.alphabet()))
}

/// Inverse of [`concat_with_upstep`]: cuts at the last up-step starting at 0.
pub fn split_at_last_up_from_zero(w: &Walk1D) -> Result<(Walk1D, Walk1D), RootOpError> {
    let end = w.end();
    if end <= 0 || end % 2 == 0 {
        return Err(RootOpError::NotPositiveOdd { end });
    }
    let j = w.last_visit(0).expect("the walk starts at 0");
    if w.steps().get(j) != Some(&Step::Up) {
        return Err(RootOpError::NoSuchStep);
    }
    Ok((w.slice(0..j), w.slice(j + 1..w.len())))
}

#[cfg(test)]
mod tests;
