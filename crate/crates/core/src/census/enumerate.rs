use crate::ballot::{BallotSequence, Vote};
use crate::walks::{Alphabet, StepSet, Walk1D, WalkNd};

use super::CensusError;

/// Length limits for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthCaps {
    pub binary: usize,
    pub ternary: usize,
    /// Cap for the full step set {-1,0,1}^2; other step sets and larger
    /// alphabets get the longest length with no more walks than this allows.
    pub nd_full: usize,
}

impl Default for LengthCaps {
    fn default() -> Self {
        LengthCaps { binary: 20, ternary: 13, nd_full: 8 }
    }
}

fn longest_within(base: u64, budget: u64) -> usize {
    if base <= 1 {
        return 63;
    }
    let mut len = 0;
    let mut count = 1u64;
    while let Some(next) = count.checked_mul(base).filter(|&c| c <= budget) {
        count = next;
        len += 1;
    }
    len
}

impl LengthCaps {
    pub fn for_alphabet(&self, alphabet: Alphabet) -> usize {
        match alphabet.t {
            0 => self.binary,
            1 => self.ternary,
            t => longest_within(2 + u64::from(t), 3u64.pow(self.ternary as u32)),
        }
    }

    pub fn for_step_set(&self, set: &StepSet) -> usize {
        if set.len() == 9 {
            return self.nd_full;
        }
        longest_within(set.len() as u64, 9u64.pow(self.nd_full as u32))
    }

    pub fn check(&self, length: usize, cap: usize, what: impl Into<String>) -> Result<(), CensusError> {
        if length > cap {
            return Err(CensusError::CapExceeded { length, cap, what: what.into() });
        }
        Ok(())
    }
}

/// Every word of a fixed length over `symbols`, last position varying
/// fastest.
#[derive(Debug, Clone)]
pub struct Odometer<T> {
    symbols: Vec<T>,
    digits: Vec<usize>,
    done: bool,
}

impl<T: Clone> Odometer<T> {
    pub fn new(symbols: Vec<T>, length: usize) -> Self {
        let done = symbols.is_empty() && length > 0;
        Odometer { symbols, digits: vec![0; length], done }
    }
}

impl<T: Clone> Iterator for Odometer<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let word = self.digits.iter().map(|&d| self.symbols[d].clone()).collect();
        let base = self.symbols.len();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < base {
                break;
            }
            self.digits[i] = 0;
        }
        Some(word)
    }
}

/// All walks of `length` over `alphabet` in lexicographic order
/// `U < D < N0 < N1 < …`.
pub fn enumerate_walks(
    length: usize,
    alphabet: Alphabet,
    caps: &LengthCaps,
) -> Result<impl Iterator<Item = Walk1D>, CensusError> {
    caps.check(length, caps.for_alphabet(alphabet), format!("walks with t = {}", alphabet.t))?;
    Ok(Odometer::new(alphabet.steps(), length).map(move |steps| Walk1D::from_steps_unchecked(steps, alphabet)))
}

/// All walks of `length` with steps from `set`, in the set's sorted order.
pub fn enumerate_walks_nd(
    length: usize,
    set: &StepSet,
    caps: &LengthCaps,
) -> Result<impl Iterator<Item = WalkNd>, CensusError> {
    caps.check(length, caps.for_step_set(set), format!("walks over a {}-step set", set.len()))?;
    let dim = set.dim();
    Ok(Odometer::new(set.members().cloned().collect(), length)
        .map(move |steps| WalkNd::from_steps_unchecked(dim, steps)))
}

/// All ballot sequences of `length` votes, `A < B`.
pub fn enumerate_ballots(
    length: usize,
    caps: &LengthCaps,
) -> Result<impl Iterator<Item = BallotSequence>, CensusError> {
    caps.check(length, caps.binary, "ballot sequences")?;
    Ok(Odometer::new(vec![Vote::A, Vote::B], length).map(BallotSequence::new))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(length: usize, t: u32) -> Vec<String> {
        enumerate_walks(length, Alphabet::new(t), &LengthCaps::default()).unwrap().map(|w| w.to_string()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(texts(2, 0), ["UU", "UD", "DU", "DD"]);
        let positive: Vec<String> = enumerate_walks(2, Alphabet::BINARY, &LengthCaps::default())
            .unwrap()
            .filter(|w| w.is_positive())
            .map(|w| w.to_string())
            .collect();
        assert_eq!(positive, ["UU", "UD"]);
        assert_eq!(texts(1, 1), ["U", "D", "N"]);
        assert_eq!(texts(0, 0), [""]);
    }

    #[test]
    fn sizes() {
        for t in 0..=3u32 {
            for len in 0..=5 {
                assert_eq!(texts(len, t).len(), (2 + t as usize).pow(len as u32));
            }
        }
        let full = StepSet::full(2);
        assert_eq!(enumerate_walks_nd(3, &full, &LengthCaps::default()).unwrap().count(), 729);
        assert_eq!(enumerate_ballots(4, &LengthCaps::default()).unwrap().count(), 16);
    }

    #[test]
    fn caps() {
        let caps = LengthCaps::default();
        assert!(matches!(
            enumerate_walks(21, Alphabet::BINARY, &caps).err(),
            Some(CensusError::CapExceeded { length: 21, cap: 20, .. })
        ));
        assert!(enumerate_walks(14, Alphabet::TERNARY, &caps).is_err());
        assert!(enumerate_walks_nd(9, &StepSet::full(2), &caps).is_err());
        assert_eq!(caps.for_alphabet(Alphabet::new(2)), 10);
        assert_eq!(caps.for_step_set(&StepSet::diagonal_with_zero(2)), 10);
    }
}
