use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::walks::{Alphabet, StepSet};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// Number of walks of `length` ending at each height. With `positive`,
/// walks visiting -1 are excluded. Heights with no walks are omitted.
pub fn end_counts(length: usize, alphabet: Alphabet, positive: bool) -> BTreeMap<i64, BigUint> {
    let mut row = BTreeMap::from([(0i64, BigUint::one())]);
    let t = BigUint::from(alphabet.t);
    for _ in 0..length {
        let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (&h, c) in &row {
            *next.entry(h + 1).or_default() += c;
            if !positive || h > 0 {
                *next.entry(h - 1).or_default() += c;
            }
            if alphabet.t > 0 {
                *next.entry(h).or_default() += c * &t;
            }
        }
        row = next;
    }
    row
}

/// Exact number of walks of `length`, optionally positive, optionally with a
/// fixed end point.
pub fn count_walks(length: usize, alphabet: Alphabet, positive: bool, end: Option<i64>) -> BigUint {
    let row = end_counts(length, alphabet, positive);
    match end {
        Some(e) => row.get(&e).cloned().unwrap_or_default(),
        None => row.values().sum(),
    }
}

/// Coefficients of `(X⁻¹ + t + X)^n`, keyed by exponent.
pub fn trinomial_row(n: usize, alphabet: Alphabet) -> BTreeMap<i64, BigUint> {
    end_counts(n, alphabet, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdPopulation {
    All,
    /// Ending at a vertex of {0,1}^n.
    EndsInUnitCube,
    /// Staying in the weakly positive orthant.
    Positive,
}

/// Exact number of walks of `length` over `set` in `population`.
pub fn count_walks_nd(length: usize, set: &StepSet, population: NdPopulation) -> BigUint {
    let mut layer: HashMap<Vec<i64>, BigUint> = HashMap::from([(vec![0; set.dim()], BigUint::one())]);
    for _ in 0..length {
        let mut next: HashMap<Vec<i64>, BigUint> = HashMap::new();
        for (pos, c) in &layer {
            for step in set.members() {
                let p: Vec<i64> = pos.iter().zip(step.deltas()).map(|(x, d)| x + i64::from(*d)).collect();
                if population == NdPopulation::Positive && p.iter().any(|&x| x < 0) {
                    continue;
                }
                *next.entry(p).or_default() += c;
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|(p, _)| population != NdPopulation::EndsInUnitCube || p.iter().all(|x| matches!(x, 0 | 1)))
        .map(|(_, c)| c)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{enumerate_walks, enumerate_walks_nd, LengthCaps};

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), BigUint::from(70u32));
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn positive_row_8() {
        let row = end_counts(8, Alphabet::BINARY, true);
        assert_eq!(row.keys().copied().collect::<Vec<_>>(), [0, 2, 4, 6, 8]);
        assert_eq!(row.values().cloned().collect::<Vec<_>>(), big(&[14, 28, 20, 7, 1]));
        assert_eq!(count_walks(8, Alphabet::BINARY, false, Some(0)), BigUint::from(70u32));
    }

    #[test]
    fn ternary_positive_row_7() {
        let row = end_counts(7, Alphabet::TERNARY, true);
        assert_eq!(row.values().cloned().collect::<Vec<_>>(), big(&[127, 196, 189, 133, 70, 27, 7, 1]));
        assert_eq!(count_walks(7, Alphabet::TERNARY, true, None), BigUint::from(750u32));
    }

    #[test]
    fn dp_agrees_with_enumeration() {
        let caps = LengthCaps::default();
        for t in 0..=2 {
            let alphabet = Alphabet::new(t);
            for len in 0..=8 {
                let mut all: BTreeMap<i64, u64> = BTreeMap::new();
                let mut pos: BTreeMap<i64, u64> = BTreeMap::new();
                for w in enumerate_walks(len, alphabet, &caps).unwrap() {
                    *all.entry(w.end()).or_default() += 1;
                    if w.is_positive() {
                        *pos.entry(w.end()).or_default() += 1;
                    }
                }
                let to_big = |m: BTreeMap<i64, u64>| m.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect();
                assert_eq!(end_counts(len, alphabet, false), to_big(all));
                assert_eq!(end_counts(len, alphabet, true), to_big(pos));
            }
        }
        for len in 0..=12 {
            let enumerated = enumerate_walks(len, Alphabet::BINARY, &caps).unwrap().filter(|w| w.is_positive()).count();
            assert_eq!(count_walks(len, Alphabet::BINARY, true, None), BigUint::from(enumerated));
        }
    }

    #[test]
    fn nd_counts_agree_with_enumeration() {
        let caps = LengthCaps::default();
        for set in [StepSet::full(2), StepSet::diagonal_with_zero(2)] {
            for len in 0..=4 {
                let walks: Vec<_> = enumerate_walks_nd(len, &set, &caps).unwrap().collect();
                let pos = walks.iter().filter(|w| w.is_positive()).count();
                let cube = walks.iter().filter(|w| w.ends_in_unit_cube()).count();
                assert_eq!(count_walks_nd(len, &set, NdPopulation::Positive), BigUint::from(pos));
                assert_eq!(count_walks_nd(len, &set, NdPopulation::EndsInUnitCube), BigUint::from(cube));
                assert_eq!(count_walks_nd(len, &set, NdPopulation::All), BigUint::from(walks.len()));
            }
        }
    }
}
