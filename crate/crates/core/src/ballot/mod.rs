//! Ballot sequences for two candidates and the bijections between their
//! "ugly" and "bad" counting scenarios.
//!
//! A sequence is GOOD when `A` leads strictly from the first vote on, BAD
//! when `B` takes the first vote, and UGLY when `A` takes the first vote but
//! the margin later drops to zero. Every bijection UGLY(α,β) → BAD(α,β) in
//! this module can be fed to [`lift`], which iterates it into a bijection
//! from almost-recurrent walks onto positive walks.

mod identities;
mod registry;

pub use identities::{check_ballot_counts, check_eq4};
pub use registry::{lift, LiftOutcome, UglyToBad};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use thiserror::Error;

use crate::census::binomial;
use crate::rootops::{self, RootOpError};
use crate::walks::{Alphabet, Step, Walk1D};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BallotError {
    #[error("EmptySequence: the ballot sequence has no votes")]
    EmptySequence,
    #[error("UnknownVote: unexpected character {0:?}, votes are 'A' or 'B'")]
    UnknownVote(char),
    #[error("NotUgly: sequence is {0}, expected UGLY")]
    NotUgly(Scenario),
    #[error("NotBad: sequence is {0}, expected BAD")]
    NotBad(Scenario),
    #[error("NoWinner: A has {alpha} votes and B has {beta}, A must win")]
    NoWinner { alpha: usize, beta: usize },
    #[error("ZeroVisitIndex: visits to the axis are counted from 1")]
    ZeroVisitIndex,
    #[error("NotEnoughVisits: asked for visit {k} to the axis, the margin returns to 0 only {found} times")]
    NotEnoughVisits { k: usize, found: usize },
    #[error("NoNegativeVisit: the walk never visits -1")]
    NoNegativeVisit,
    #[error("NeutralStep: ballot walks have only up- and down-steps")]
    NeutralStep,
    #[error("BadInput: {0}")]
    BadInput(String),
    #[error("EvenLength: expected an odd number of votes, found {0}")]
    EvenLength(usize),
    #[error("OddLength: expected an even number of votes, found {0}")]
    OddLength(usize),
    #[error("NoFlips: the walk has depth 0, theorem-1 reverses no step")]
    NoFlips,
    #[error("MapFailed: {map} failed on {input}: {reason}")]
    MapFailed { map: &'static str, input: String, reason: String },
    #[error(transparent)]
    Walk(#[from] RootOpError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vote {
    A,
    B,
}

impl Vote {
    pub fn other(self) -> Vote {
        match self {
            Vote::A => Vote::B,
            Vote::B => Vote::A,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Vote::A => 1,
            Vote::B => -1,
        }
    }

    fn step(self) -> Step {
        match self {
            Vote::A => Step::Up,
            Vote::B => Step::Down,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    Good,
    Bad,
    Ugly,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::Good => "GOOD",
            Scenario::Bad => "BAD",
            Scenario::Ugly => "UGLY",
        })
    }
}

/// A sequence of votes with its running margins `m_0 = 0, m_1, …` of `A`
/// over `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotSequence {
    votes: Vec<Vote>,
    margins: Vec<i64>,
}

impl BallotSequence {
    pub fn new(votes: Vec<Vote>) -> Self {
        let mut margins = Vec::with_capacity(votes.len() + 1);
        let mut m = 0;
        margins.push(m);
        for v in &votes {
            m += v.delta();
            margins.push(m);
        }
        BallotSequence { votes, margins }
    }

    pub fn votes(&self) -> &[Vote] {
        &self.votes
    }

    /// Margins after 0, 1, …, μ votes.
    pub fn margins(&self) -> &[i64] {
        &self.margins
    }

    pub fn len(&self) -> usize {
        self.votes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.votes.is_empty()
    }

    pub fn alpha(&self) -> usize {
        self.votes.iter().filter(|v| **v == Vote::A).count()
    }

    pub fn beta(&self) -> usize {
        self.len() - self.alpha()
    }

    pub fn final_margin(&self) -> i64 {
        *self.margins.last().unwrap()
    }

    /// Every vote swapped.
    pub fn complement(&self) -> BallotSequence {
        BallotSequence::new(self.votes.iter().map(|v| v.other()).collect())
    }

    /// Vote counts `j >= 1` after which the margin is 0.
    pub fn zero_visits(&self) -> Vec<usize> {
        (1..self.margins.len()).filter(|&j| self.margins[j] == 0).collect()
    }

    fn spliced(parts: &[&[Vote]]) -> BallotSequence {
        BallotSequence::new(parts.iter().flat_map(|p| p.iter().copied()).collect())
    }
}

impl fmt::Display for BallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.votes {
            f.write_str(match v {
                Vote::A => "A",
                Vote::B => "B",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BallotSequence {
    type Err = BallotError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let votes = s
            .chars()
            .map(|c| match c {
                'A' => Ok(Vote::A),
                'B' => Ok(Vote::B),
                other => Err(BallotError::UnknownVote(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(BallotSequence::new(votes))
    }
}

pub fn classify_ballot(s: &BallotSequence) -> Result<Scenario, BallotError> {
    match s.votes.first() {
        None => Err(BallotError::EmptySequence),
        Some(Vote::B) => Ok(Scenario::Bad),
        Some(Vote::A) if s.margins[1..].iter().all(|&m| m >= 1) => Ok(Scenario::Good),
        Some(Vote::A) => Ok(Scenario::Ugly),
    }
}

fn require(s: &BallotSequence, want: Scenario) -> Result<(), BallotError> {
    let got = classify_ballot(s)?;
    match (want, got) {
        (w, g) if w == g => Ok(()),
        (Scenario::Ugly, g) => Err(BallotError::NotUgly(g)),
        (_, g) => Err(BallotError::NotBad(g)),
    }
}

/// Drops the first vote and reads the rest as a binary walk, `A` up.
pub fn strip(s: &BallotSequence) -> Result<Walk1D, BallotError> {
    if s.is_empty() {
        return Err(BallotError::EmptySequence);
    }
    let steps = s.votes[1..].iter().map(|v| v.step()).collect();
    Ok(Walk1D::new(steps, Alphabet::BINARY).expect("binary steps"))
}

pub fn unstrip(first: Vote, w: &Walk1D) -> Result<BallotSequence, BallotError> {
    let mut votes = Vec::with_capacity(w.len() + 1);
    votes.push(first);
    for s in w.steps() {
        votes.push(match s {
            Step::Up => Vote::A,
            Step::Down => Vote::B,
            Step::Neutral(_) => return Err(BallotError::NeutralStep),
        });
    }
    Ok(BallotSequence::new(votes))
}

/// André's rearrangement: split an ugly sequence just before the vote that
/// levels the margin and swap the two parts.
pub fn andre(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    require(s, Scenario::Ugly)?;
    let j = s.zero_visits()[0];
    let (p1, p2) = s.votes.split_at(j - 1);
    Ok(BallotSequence::spliced(&[p2, p1]))
}

/// Undoes [`andre`]: the moved block starts at the last vote for `A` that
/// brings the margin to its final value.
pub fn andre_inverse(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    let (alpha, beta) = (s.alpha(), s.beta());
    if alpha <= beta {
        return Err(BallotError::NoWinner { alpha, beta });
    }
    require(s, Scenario::Bad)?;
    let fin = s.final_margin();
    let p = (1..=s.len())
        .rev()
        .find(|&j| s.votes[j - 1] == Vote::A && s.margins[j] == fin)
        .expect("a winning bad sequence reaches its final margin with a vote for A");
    let (p2, p1) = s.votes.split_at(p - 1);
    Ok(BallotSequence::spliced(&[p1, p2]))
}

/// André's map on stripped walks: remove the down-step first reaching -1 and
/// swap the remaining parts around an inserted up-step.
pub fn andre_stripped(w: &Walk1D) -> Result<Walk1D, BallotError> {
    let t = w.first_visit(-1).ok_or(BallotError::NoNegativeVisit)?;
    let i = t - 1;
    Ok(Walk1D::concat([&w.steps()[i + 1..], &[Step::Up][..], &w.steps()[..i]], w.alphabet()))
}

fn reflect_through(s: &BallotSequence, j: usize) -> BallotSequence {
    let head: Vec<Vote> = s.votes[..j].iter().map(|v| v.other()).collect();
    BallotSequence::spliced(&[&head, &s.votes[j..]])
}

/// Reflection method: complement every vote up to the first return of the
/// margin to zero.
pub fn reflect_first(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    reflect_kth(s, 1)
}

/// Complement up to the `k`-th return to zero (counted from 1).
pub fn reflect_kth(s: &BallotSequence, k: usize) -> Result<BallotSequence, BallotError> {
    require(s, Scenario::Ugly)?;
    if k == 0 {
        return Err(BallotError::ZeroVisitIndex);
    }
    let zeros = s.zero_visits();
    let j = *zeros.get(k - 1).ok_or(BallotError::NotEnoughVisits { k, found: zeros.len() })?;
    Ok(reflect_through(s, j))
}

/// Complement up to the last return to zero.
pub fn reflect_last(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    require(s, Scenario::Ugly)?;
    let j = *s.zero_visits().last().expect("ugly sequences return to zero");
    Ok(reflect_through(s, j))
}

/// Complement up to the `k`-th return to zero, or the last one when there
/// are fewer. The number of returns is unchanged by the reflection, so this
/// rule is still a bijection.
pub fn reflect_kth_or_last(s: &BallotSequence, k: usize) -> Result<BallotSequence, BallotError> {
    require(s, Scenario::Ugly)?;
    if k == 0 {
        return Err(BallotError::ZeroVisitIndex);
    }
    let zeros = s.zero_visits();
    Ok(reflect_through(s, zeros[(k - 1).min(zeros.len() - 1)]))
}

/// Central symmetry: reverse the order of the votes up to the first return
/// to zero.
pub fn central_first(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    require(s, Scenario::Ugly)?;
    let j = s.zero_visits()[0];
    let head: Vec<Vote> = s.votes[..j].iter().rev().copied().collect();
    Ok(BallotSequence::spliced(&[&head, &s.votes[j..]]))
}

/// The raising operator read as a map UGLY → BAD on stripped sequences.
pub fn raise_as_ugly_to_bad(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    require(s, Scenario::Ugly)?;
    let raised = rootops::raise(&strip(s)?)?;
    unstrip(Vote::B, &raised)
}

/// Removes the first vote; a removed `B` complements the remainder.
pub fn footnote_bijection(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    if s.len().is_multiple_of(2) {
        return Err(BallotError::EvenLength(s.len()));
    }
    let (alpha, beta) = (s.alpha(), s.beta());
    if alpha <= beta {
        return Err(BallotError::NoWinner { alpha, beta });
    }
    let rest = BallotSequence::new(s.votes[1..].to_vec());
    Ok(match s.votes[0] {
        Vote::A => rest,
        Vote::B => rest.complement(),
    })
}

pub fn footnote_inverse(s: &BallotSequence) -> Result<BallotSequence, BallotError> {
    if s.len() % 2 == 1 {
        return Err(BallotError::OddLength(s.len()));
    }
    Ok(if s.final_margin() >= 0 {
        BallotSequence::spliced(&[&[Vote::A], &s.votes])
    } else {
        BallotSequence::spliced(&[&[Vote::B], s.complement().votes()])
    })
}

/// Scans backwards in time for the last visit to -1, then the preceding
/// visit to 1, then -1 again, and so on; returns how many visits were found.
pub fn alternating_visits(w: &Walk1D) -> usize {
    let heights = w.heights();
    let mut end = heights.len();
    let mut target = -1;
    let mut found = 0;
    while let Some(p) = heights[..end].iter().rposition(|&h| h == target) {
        found += 1;
        end = p;
        target = -target;
    }
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotCounts {
    pub total: BigUint,
    pub good: BigUint,
    pub bad: BigUint,
    pub ugly: BigUint,
    /// Probability that `A` leads throughout, `(α-β)/(α+β)`.
    pub probability: Ratio<u64>,
}

pub fn ballot_counts(alpha: usize, beta: usize) -> Result<BallotCounts, BallotError> {
    if alpha <= beta {
        return Err(BallotError::NoWinner { alpha, beta });
    }
    let mu = (alpha + beta) as i64;
    let a = alpha as i64;
    let bad = binomial(mu - 1, a);
    Ok(BallotCounts {
        total: binomial(mu, a),
        good: binomial(mu - 1, a - 1) - binomial(mu - 1, a),
        ugly: bad.clone(),
        bad,
        probability: Ratio::new((alpha - beta) as u64, (alpha + beta) as u64),
    })
}

/// The result of iterating André's map, described through the theorem-1
/// image: drop the last reversed step and swap the two remaining parts
/// around an up-step.
pub fn andre_from_theorem1(w: &Walk1D) -> Result<Walk1D, BallotError> {
    let flips = rootops::theorem1_flip_positions(w)?;
    let &last = flips.last().ok_or(BallotError::NoFlips)?;
    let image = w.with_flipped(&flips);
    Ok(Walk1D::concat([&image.steps()[last + 1..], &[Step::Up][..], &image.steps()[..last]], w.alphabet()))
}
