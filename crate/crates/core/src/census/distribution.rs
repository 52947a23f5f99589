use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::ballot::{alternating_visits, lift, unstrip, UglyToBad, Vote};
use crate::walks::{Alphabet, Walk1D};

use super::{enumerate_walks, CensusError, LengthCaps};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    Depth,
    End,
    AlternatingVisits,
    /// Iterations of [`lift`] with the given map on `A` followed by the walk.
    LiftIterations(UglyToBad),
}

impl FromStr for Stat {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CensusError::UnknownStat(s.to_string());
        match s {
            "depth" => Ok(Stat::Depth),
            "end" => Ok(Stat::End),
            "alternating_visits" | "alternating-visits" | "altvisits" => Ok(Stat::AlternatingVisits),
            _ => {
                let name =
                    s.strip_prefix("lift-iterations:").or_else(|| s.strip_prefix("lift-iters:")).ok_or_else(unknown)?;
                name.parse().map(Stat::LiftIterations).map_err(|_| unknown())
            }
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stat::Depth => f.write_str("depth"),
            Stat::End => f.write_str("end"),
            Stat::AlternatingVisits => f.write_str("alternating_visits"),
            Stat::LiftIterations(m) => write!(f, "lift-iterations:{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Population {
    All,
    Positive,
    Recurrent,
    AlmostRecurrent,
}

impl Population {
    pub fn contains(self, w: &Walk1D) -> bool {
        match self {
            Population::All => true,
            Population::Positive => w.is_positive(),
            Population::Recurrent => w.is_recurrent(),
            Population::AlmostRecurrent => w.is_almost_recurrent(),
        }
    }
}

impl FromStr for Population {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Population::All),
            "positive" => Ok(Population::Positive),
            "recurrent" => Ok(Population::Recurrent),
            "almost-recurrent" | "almost_recurrent" => Ok(Population::AlmostRecurrent),
            _ => Err(CensusError::UnknownPopulation(s.to_string())),
        }
    }
}

fn evaluate(stat: Stat, w: &Walk1D) -> Result<i64, CensusError> {
    Ok(match stat {
        Stat::Depth => w.depth(),
        Stat::End => w.end(),
        Stat::AlternatingVisits => alternating_visits(w) as i64,
        Stat::LiftIterations(f) => {
            let seq = unstrip(Vote::A, w).map_err(|e| CensusError::Unsupported(e.to_string()))?;
            lift(f, &seq).map_err(|e| CensusError::Unsupported(e.to_string()))?.iterations as i64
        }
    })
}

/// Exact histogram of `stat` over the walks of `length` in `population`.
pub fn distribution(
    stat: Stat,
    population: Population,
    length: usize,
    alphabet: Alphabet,
    caps: &LengthCaps,
) -> Result<BTreeMap<i64, u64>, CensusError> {
    if let Stat::LiftIterations(_) = stat {
        if alphabet.t != 0 {
            return Err(CensusError::Unsupported("lift iterations need binary walks".into()));
        }
        if !matches!(population, Population::Recurrent | Population::AlmostRecurrent) {
            return Err(CensusError::Unsupported("lift iterations are defined on almost-recurrent walks only".into()));
        }
    }
    let mut hist = BTreeMap::new();
    for w in enumerate_walks(length, alphabet, caps)?.filter(|w| population.contains(w)) {
        *hist.entry(evaluate(stat, &w)?).or_insert(0) += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(stat: &str, pop: &str, len: usize) -> Vec<(i64, u64)> {
        distribution(stat.parse().unwrap(), pop.parse().unwrap(), len, Alphabet::BINARY, &LengthCaps::default())
            .unwrap()
            .into_iter()
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(dist("depth", "almost-recurrent", 2), [(0, 1), (1, 1)]);
        assert_eq!(dist("alternating_visits", "almost-recurrent", 2), [(0, 1), (1, 1)]);
        assert_eq!(dist("end", "positive", 8), [(0, 14), (2, 28), (4, 20), (6, 7), (8, 1)]);
    }

    #[test]
    fn lift_iterations_match_depth_histogram() {
        for len in 0..=10 {
            let depth = dist("depth", "almost-recurrent", len);
            for f in UglyToBad::ALL {
                assert_eq!(dist(&format!("lift-iters:{f}"), "almost-recurrent", len), depth, "{f} len {len}");
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("width".parse::<Stat>(), Err(CensusError::UnknownStat(_))));
        assert!(matches!("lift-iters:nope".parse::<Stat>(), Err(CensusError::UnknownStat(_))));
        assert!("nowhere".parse::<Population>().is_err());
        assert!(distribution(
            Stat::LiftIterations(UglyToBad::Andre),
            Population::All,
            3,
            Alphabet::BINARY,
            &LengthCaps::default()
        )
        .is_err());
    }
}
