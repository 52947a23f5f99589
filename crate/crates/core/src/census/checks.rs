//! Named exhaustive checks, one call per size.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::ballot::{
    alternating_visits, andre_from_theorem1, classify_ballot, footnote_bijection, footnote_inverse, lift, strip,
    unstrip, BallotSequence, Scenario, UglyToBad, Vote,
};
use crate::rootops::{
    concat_with_upstep, full_lower, raise, raise_fully, reverse_negate, split_at_last_up_from_zero, theorem1_forward,
    theorem1_inverse, theorem2_forward, theorem2_inverse,
};
use crate::walks::{Alphabet, StepSet, Walk1D, WalkNd};

use super::distribution::{distribution, Population, Stat};
use super::{
    binomial, count_walks, count_walks_nd, end_counts, enumerate_ballots, enumerate_walks, enumerate_walks_nd,
    verify_bijection, CensusError, IdentityReport, LengthCaps, NdPopulation, Preserved, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Theorem1,
    Theorem2,
    UglyToBad(UglyToBad),
    Lift(UglyToBad),
    /// Size parameter `n`: sequences of length `2n + 1`.
    Footnote,
    Concat,
    FullLower,
    ReverseNegate,
    AndreFromTheorem1,
    Corollary,
    StatsEqualities,
    /// Negative control: a single raise instead of the full iteration.
    BrokenRaise,
}

impl Check {
    pub fn all() -> Vec<Check> {
        let mut v = vec![Check::Theorem1, Check::Theorem2];
        v.extend(UglyToBad::ALL.map(Check::UglyToBad));
        v.extend(UglyToBad::ALL.map(Check::Lift));
        v.extend([
            Check::Footnote,
            Check::Concat,
            Check::FullLower,
            Check::ReverseNegate,
            Check::AndreFromTheorem1,
            Check::Corollary,
            Check::StatsEqualities,
        ]);
        v
    }

    /// Largest size accepted by [`run_check`] under `ctx`.
    pub fn max_length(self, ctx: &CheckContext) -> usize {
        let caps = &ctx.caps;
        match self {
            Check::Theorem1 | Check::FullLower | Check::ReverseNegate | Check::BrokenRaise => {
                caps.for_alphabet(ctx.alphabet)
            }
            Check::Concat => caps.for_alphabet(ctx.alphabet).saturating_sub(1),
            Check::Theorem2 => caps.for_step_set(&ctx.step_set),
            Check::Footnote => caps.binary.saturating_sub(1) / 2,
            _ => caps.binary,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Theorem1 => f.write_str("theorem1"),
            Check::Theorem2 => f.write_str("theorem2"),
            Check::UglyToBad(m) => write!(f, "{m}"),
            Check::Lift(m) => write!(f, "lift:{m}"),
            Check::Footnote => f.write_str("footnote"),
            Check::Concat => f.write_str("concat"),
            Check::FullLower => f.write_str("full-lower"),
            Check::ReverseNegate => f.write_str("reverse-negate"),
            Check::AndreFromTheorem1 => f.write_str("andre-from-theorem1"),
            Check::Corollary => f.write_str("corollary"),
            Check::StatsEqualities => f.write_str("stats-equalities"),
            Check::BrokenRaise => f.write_str("broken-raise"),
        }
    }
}

impl FromStr for Check {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CensusError::UnknownMap(s.to_string());
        Ok(match s {
            "theorem1" => Check::Theorem1,
            "theorem2" => Check::Theorem2,
            "footnote" => Check::Footnote,
            "concat" => Check::Concat,
            "full-lower" => Check::FullLower,
            "reverse-negate" => Check::ReverseNegate,
            "andre-from-theorem1" => Check::AndreFromTheorem1,
            "corollary" => Check::Corollary,
            "stats-equalities" => Check::StatsEqualities,
            "broken-raise" => Check::BrokenRaise,
            _ => match s.strip_prefix("lift:") {
                Some(name) => Check::Lift(name.parse().map_err(|_| unknown())?),
                None => Check::UglyToBad(s.parse().map_err(|_| unknown())?),
            },
        })
    }
}

#[derive(Debug, Clone)]
pub struct CheckContext {
    pub alphabet: Alphabet,
    pub step_set: StepSet,
    pub caps: LengthCaps,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext { alphabet: Alphabet::BINARY, step_set: StepSet::full(2), caps: LengthCaps::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Bijection(VerificationReport),
    Identity(IdentityReport),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        match self {
            CheckOutcome::Bijection(r) => r.passed(),
            CheckOutcome::Identity(r) => r.passed(),
        }
    }

    /// One line summarising the outcome.
    pub fn summary(&self, length: usize) -> String {
        match self {
            CheckOutcome::Bijection(r) => r.to_string(),
            CheckOutcome::Identity(r) => {
                let status = if r.passed() { "OK" } else { "FAIL" };
                let mut line = format!("{status} {} len={length} checks={}", r.name, r.entries.len());
                if let Some(e) = r.first_failure() {
                    line.push_str(&format!(" first failure: {} {} != {}", e.label, e.lhs, e.rhs));
                }
                line
            }
        }
    }
}

fn to_u64(n: BigUint) -> u64 {
    n.to_u64().expect("enumerable sizes fit in u64")
}

fn is_ugly(s: &BallotSequence) -> bool {
    classify_ballot(s) == Ok(Scenario::Ugly)
}

fn wins(s: &BallotSequence) -> bool {
    s.alpha() > s.beta()
}

/// A pair of walks shown as `prefix|suffix`.
struct Pair(Walk1D, Walk1D);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.0, self.1)
    }
}

fn histogram_text(h: &BTreeMap<i64, u64>) -> String {
    let cells: Vec<String> = h.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", cells.join(", "))
}

pub fn run_check(check: Check, length: usize, ctx: &CheckContext) -> Result<CheckOutcome, CensusError> {
    let caps = &ctx.caps;
    let name = check.to_string();
    let bin = Alphabet::BINARY;
    let report = match check {
        Check::Theorem1 => {
            let alphabet = ctx.alphabet;
            let domain = enumerate_walks(length, alphabet, caps)?.filter(|w| w.is_almost_recurrent());
            verify_bijection(
                &name,
                length,
                domain,
                to_u64(count_walks(length, alphabet, true, None)),
                theorem1_forward,
                |y: &Walk1D| y.is_positive(),
                &[
                    Preserved::new("length", |x: &Walk1D, y: &Walk1D| x.len() == y.len()),
                    Preserved::new("neutral_count", |x: &Walk1D, y: &Walk1D| x.neutral_count() == y.neutral_count()),
                    Preserved::new("endpoint", |x: &Walk1D, y: &Walk1D| y.end() == 2 * x.depth() + x.end()),
                    Preserved::new("inverse", |x: &Walk1D, y: &Walk1D| theorem1_inverse(y).as_ref() == Ok(x)),
                    Preserved::new("iterated-raise", |x: &Walk1D, y: &Walk1D| {
                        let (r, n) = raise_fully(x);
                        &r == y && n as i64 == x.depth()
                    }),
                ],
            )
        }
        Check::Theorem2 => {
            let set = &ctx.step_set;
            let domain = enumerate_walks_nd(length, set, caps)?.filter(|w| w.ends_in_unit_cube());
            verify_bijection(
                &name,
                length,
                domain,
                to_u64(count_walks_nd(length, set, NdPopulation::Positive)),
                theorem2_forward,
                |y: &WalkNd| y.is_positive(),
                &[
                    Preserved::new("length", |x: &WalkNd, y: &WalkNd| x.len() == y.len()),
                    Preserved::new("steps-in-set", |_: &WalkNd, y: &WalkNd| y.steps().iter().all(|s| set.contains(s))),
                    Preserved::new("inverse", |x: &WalkNd, y: &WalkNd| theorem2_inverse(y).as_ref() == Ok(x)),
                    Preserved::new("coordinate-order", |x: &WalkNd, y: &WalkNd| {
                        &crate::rootops::multi::forward_in_order(x, (0..x.dim()).rev()) == y
                    }),
                ],
            )
        }
        Check::UglyToBad(f) => {
            let codomain = enumerate_ballots(length, caps)?
                .filter(|s| wins(s) && classify_ballot(s) == Ok(Scenario::Bad))
                .count() as u64;
            let domain = enumerate_ballots(length, caps)?.filter(|s| wins(s) && is_ugly(s));
            verify_bijection(
                &name,
                length,
                domain,
                codomain,
                |s| f.apply(s),
                |y: &BallotSequence| classify_ballot(y) == Ok(Scenario::Bad),
                &[Preserved::new("vote-counts", |x: &BallotSequence, y: &BallotSequence| {
                    x.alpha() == y.alpha() && x.beta() == y.beta()
                })],
            )
        }
        Check::Lift(f) => {
            let codomain =
                enumerate_ballots(length, caps)?.filter(|s| classify_ballot(s) == Ok(Scenario::Good)).count() as u64;
            let domain = enumerate_ballots(length, caps)?.filter(|s| {
                matches!(classify_ballot(s), Ok(Scenario::Good | Scenario::Ugly)) && matches!(s.final_margin(), 1 | 2)
            });
            let iterations = move |x: &BallotSequence| lift(f, x).map(|o| o.iterations as i64).unwrap_or(-1);
            let depth = |x: &BallotSequence| strip(x).map(|w| w.depth()).unwrap_or(-1);
            let mut preserved =
                vec![Preserved::new("length", |x: &BallotSequence, y: &BallotSequence| x.len() == y.len())];
            match f {
                UglyToBad::Raise => {
                    preserved.push(Preserved::new("theorem1-agrees", |x: &BallotSequence, y: &BallotSequence| {
                        let via = strip(x).ok().and_then(|w| theorem1_forward(&w).ok());
                        via.and_then(|w| unstrip(Vote::A, &w).ok()).as_ref() == Some(y)
                    }));
                    preserved
                        .push(Preserved::new("iterations=depth", move |x: &BallotSequence, _: &BallotSequence| {
                            iterations(x) == depth(x)
                        }));
                }
                UglyToBad::Andre => {
                    preserved
                        .push(Preserved::new("iterations=depth", move |x: &BallotSequence, _: &BallotSequence| {
                            iterations(x) == depth(x)
                        }));
                }
                UglyToBad::ReflectLast => {
                    preserved.push(Preserved::new(
                        "iterations=alternating_visits",
                        move |x: &BallotSequence, _: &BallotSequence| {
                            let visits = strip(x).map(|w| alternating_visits(&w) as i64).unwrap_or(-2);
                            iterations(x) == visits
                        },
                    ));
                }
                _ => {}
            }
            verify_bijection(
                &name,
                length,
                domain,
                codomain,
                |s| lift(f, s).map(|o| o.sequence),
                |y: &BallotSequence| classify_ballot(y) == Ok(Scenario::Good),
                &preserved,
            )
        }
        Check::Footnote => {
            let domain = enumerate_ballots(2 * length + 1, caps)?.filter(wins);
            verify_bijection(
                &name,
                length,
                domain,
                4u64.pow(length as u32),
                footnote_bijection,
                |y: &BallotSequence| y.len() == 2 * length,
                &[Preserved::new("inverse", |x: &BallotSequence, y: &BallotSequence| {
                    footnote_inverse(y).as_ref() == Ok(x)
                })],
            )
        }
        Check::Concat => {
            let alphabet = ctx.alphabet;
            caps.check(length + 1, caps.for_alphabet(alphabet), format!("walks with t = {}", alphabet.t))?;
            let mut pairs = Vec::new();
            for i in 0..=length {
                let prefixes: Vec<Walk1D> = enumerate_walks(i, alphabet, caps)?.filter(|w| w.is_recurrent()).collect();
                let suffixes: Vec<Walk1D> = enumerate_walks(length - i, alphabet, caps)?
                    .filter(|w| w.is_positive() && w.end() % 2 == 0)
                    .collect();
                for p in &prefixes {
                    for s in &suffixes {
                        pairs.push(Pair(p.clone(), s.clone()));
                    }
                }
            }
            let codomain: BigUint = end_counts(length + 1, alphabet, false)
                .into_iter()
                .filter(|(e, _)| *e > 0 && e % 2 == 1)
                .map(|(_, c)| c)
                .sum();
            verify_bijection(
                &name,
                length,
                pairs,
                to_u64(codomain),
                |p: &Pair| concat_with_upstep(&p.0, &p.1),
                |y: &Walk1D| y.end() > 0 && y.end() % 2 == 1 && y.len() == length + 1,
                &[Preserved::new("split-inverse", |x: &Pair, y: &Walk1D| {
                    split_at_last_up_from_zero(y).is_ok_and(|(a, b)| a == x.0 && b == x.1)
                })],
            )
        }
        Check::FullLower | Check::ReverseNegate => {
            let alphabet = ctx.alphabet;
            let codomain = enumerate_walks(length, alphabet, caps)?.filter(|w| w.end() == w.min()).count() as u64;
            let domain = enumerate_walks(length, alphabet, caps)?.filter(|w| w.is_positive());
            let endpoint = Preserved::new("endpoint", |x: &Walk1D, y: &Walk1D| y.end() == -x.end());
            if check == Check::FullLower {
                verify_bijection(
                    &name,
                    length,
                    domain,
                    codomain,
                    full_lower,
                    |y: &Walk1D| y.end() == y.min(),
                    &[endpoint],
                )
            } else {
                verify_bijection(
                    &name,
                    length,
                    domain,
                    codomain,
                    |w| Ok::<_, String>(reverse_negate(w)),
                    |y: &Walk1D| y.end() == y.min(),
                    &[endpoint, Preserved::new("involution", |x: &Walk1D, y: &Walk1D| &reverse_negate(y) == x)],
                )
            }
        }
        Check::AndreFromTheorem1 => {
            let domain = enumerate_walks(length, bin, caps)?.filter(|w| w.is_almost_recurrent() && w.depth() >= 1);
            let codomain: BigUint =
                end_counts(length, bin, true).into_iter().filter(|(e, _)| *e >= 2).map(|(_, c)| c).sum();
            verify_bijection(
                &name,
                length,
                domain,
                to_u64(codomain),
                andre_from_theorem1,
                |y: &Walk1D| y.is_positive() && y.end() >= 2,
                &[Preserved::new("agrees-with-lift-andre", |x: &Walk1D, y: &Walk1D| {
                    let lifted = unstrip(Vote::A, x).ok().and_then(|s| lift(UglyToBad::Andre, &s).ok());
                    lifted.and_then(|o| strip(&o.sequence).ok()).as_ref() == Some(y)
                })],
            )
        }
        Check::BrokenRaise => {
            let alphabet = ctx.alphabet;
            let domain = enumerate_walks(length, alphabet, caps)?.filter(|w| w.is_almost_recurrent());
            verify_bijection(
                &name,
                length,
                domain,
                to_u64(count_walks(length, alphabet, true, None)),
                |w: &Walk1D| raise(w).or_else(|_| Ok::<_, String>(w.clone())),
                |y: &Walk1D| y.is_positive(),
                &[],
            )
        }
        Check::Corollary => return corollary(length, caps).map(CheckOutcome::Identity),
        Check::StatsEqualities => return stats_equalities(length, caps).map(CheckOutcome::Identity),
    };
    Ok(CheckOutcome::Bijection(report))
}

/// Counts walks of length `n` ending at `n mod 2` by their number of
/// alternating visits, against binomial coefficients.
fn corollary(n: usize, caps: &LengthCaps) -> Result<IdentityReport, CensusError> {
    let mut exact: BTreeMap<usize, u64> = BTreeMap::new();
    for w in enumerate_walks(n, Alphabet::BINARY, caps)?.filter(|w| w.end() == (n % 2) as i64) {
        *exact.entry(alternating_visits(&w)).or_default() += 1;
    }
    let n = n as i64;
    let half_up = (n + 1) / 2;
    let mut rep = IdentityReport::new("corollary");
    for d in 0..=n / 2 {
        let at_least: u64 = exact.range(d as usize..).map(|(_, c)| c).sum();
        rep.push(format!("n={n} at-least d={d}"), at_least, binomial(n, half_up + d));
        let exactly = exact.get(&(d as usize)).copied().unwrap_or(0);
        rep.push(format!("n={n} exactly d={d}"), exactly, binomial(n, half_up + d) - binomial(n, half_up + d + 1));
    }
    let beyond: u64 = exact.range((n / 2 + 1) as usize..).map(|(_, c)| c).sum();
    rep.push(format!("n={n} beyond floor(n/2)"), beyond, 0);
    Ok(rep)
}

/// Histograms of depth, alternating visits and every lift-iteration count
/// over almost-recurrent walks, which must all coincide with "half the end
/// point rounded down" over positive walks.
fn stats_equalities(n: usize, caps: &LengthCaps) -> Result<IdentityReport, CensusError> {
    let bin = Alphabet::BINARY;
    let pop = Population::AlmostRecurrent;
    let depth = distribution(Stat::Depth, pop, n, bin, caps)?;
    let mut half_end: BTreeMap<i64, u64> = BTreeMap::new();
    for (e, c) in distribution(Stat::End, Population::Positive, n, bin, caps)? {
        *half_end.entry(e / 2).or_default() += c;
    }
    let mut rep = IdentityReport::new("stats-equalities");
    rep.push(format!("n={n} depth vs positive half-end"), histogram_text(&depth), histogram_text(&half_end));
    let mut others = vec![Stat::AlternatingVisits];
    others.extend(UglyToBad::ALL.map(Stat::LiftIterations));
    for stat in others {
        let h = distribution(stat, pop, n, bin, caps)?;
        rep.push(format!("n={n} depth vs {stat}"), histogram_text(&depth), histogram_text(&h));
    }
    Ok(rep)
}
