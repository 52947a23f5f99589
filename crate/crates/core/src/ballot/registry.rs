use std::fmt;
use std::str::FromStr;

use super::{
    andre, central_first, classify_ballot, raise_as_ugly_to_bad, reflect_first, reflect_kth_or_last, reflect_last,
    BallotError, BallotSequence, Scenario, Vote,
};

/// The registered bijections UGLY(α,β) → BAD(α,β).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UglyToBad {
    Andre,
    ReflectFirst,
    /// Second return to the axis when there is one, else the unique return.
    ReflectSecond,
    ReflectLast,
    Central,
    Raise,
}

impl UglyToBad {
    pub const ALL: [UglyToBad; 6] = [
        UglyToBad::Andre,
        UglyToBad::ReflectFirst,
        UglyToBad::ReflectSecond,
        UglyToBad::ReflectLast,
        UglyToBad::Central,
        UglyToBad::Raise,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UglyToBad::Andre => "andre",
            UglyToBad::ReflectFirst => "reflect-first",
            UglyToBad::ReflectSecond => "reflect-second",
            UglyToBad::ReflectLast => "reflect-last",
            UglyToBad::Central => "central",
            UglyToBad::Raise => "raise",
        }
    }

    pub fn apply(self, s: &BallotSequence) -> Result<BallotSequence, BallotError> {
        match self {
            UglyToBad::Andre => andre(s),
            UglyToBad::ReflectFirst => reflect_first(s),
            UglyToBad::ReflectSecond => reflect_kth_or_last(s, 2),
            UglyToBad::ReflectLast => reflect_last(s),
            UglyToBad::Central => central_first(s),
            UglyToBad::Raise => raise_as_ugly_to_bad(s),
        }
    }
}

impl fmt::Display for UglyToBad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UglyToBad {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raise-ballot" | "raise_as_ugly_to_bad" => Ok(UglyToBad::Raise),
            "central-first" | "central_first" => Ok(UglyToBad::Central),
            _ => UglyToBad::ALL
                .into_iter()
                .find(|m| m.name() == s || m.name().replace('-', "_") == s)
                .ok_or_else(|| format!("unknown ugly-to-bad map {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftOutcome {
    pub sequence: BallotSequence,
    pub iterations: usize,
}

/// Iterates `f` on a non-bad sequence with final margin 1 or 2: while the
/// sequence is ugly, map it to a bad one and turn its initial `B` into an
/// `A`. The result is good and has the same length.
pub fn lift(f: UglyToBad, s: &BallotSequence) -> Result<LiftOutcome, BallotError> {
    let scenario = classify_ballot(s)?;
    if scenario == Scenario::Bad {
        return Err(BallotError::BadInput(format!("{s} is BAD")));
    }
    if !matches!(s.final_margin(), 1 | 2) {
        return Err(BallotError::BadInput(format!("final margin {} is not 1 or 2", s.final_margin())));
    }
    let bound = s.beta();
    let mut cur = s.clone();
    let mut iterations = 0;
    while classify_ballot(&cur)? == Scenario::Ugly {
        let fail = |reason: String| BallotError::MapFailed { map: f.name(), input: cur.to_string(), reason };
        let bad = f.apply(&cur).map_err(|e| fail(e.to_string()))?;
        if classify_ballot(&bad)? != Scenario::Bad || bad.alpha() != cur.alpha() {
            return Err(fail(format!("produced {bad}, not a bad sequence with the same votes")));
        }
        iterations += 1;
        if iterations > bound {
            return Err(fail(format!("more than {bound} iterations")));
        }
        let mut votes = bad.votes().to_vec();
        votes[0] = Vote::A;
        cur = BallotSequence::new(votes);
    }
    Ok(LiftOutcome { sequence: cur, iterations })
}
