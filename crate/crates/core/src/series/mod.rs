//! Truncated power series with exact integer coefficients, and checks of the
//! convolution identities for recurrent-walk counts.
//!
//! `R_{t,i}` is the number of recurrent walks of length `i` with `t` neutral
//! kinds, i.e. the constant term of `(X⁻¹ + t + X)^i`. Square roots of series
//! never appear: every identity is checked in squared form.

mod identities;

pub use identities::{check_eq1, check_eq2, check_eq2_census, check_eq3, check_t2_coincidence, DEFAULT_T_VALUES};

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("NonUnitConstantTerm: constant term {0} is not 1 or -1")]
    NonUnitConstantTerm(BigInt),
}

/// `c_0 + c_1 X + … + c_N X^N  (mod X^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, truncated or zero-padded
    /// to degree `cap`.
    pub fn new(mut coeffs: Vec<BigInt>, cap: usize) -> Self {
        coeffs.resize(cap + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], cap: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), cap)
    }

    pub fn one(cap: usize) -> Self {
        Self::from_i64(&[1], cap)
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// Truncated product; the result keeps the smaller cap.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap().min(other.cap());
        let mut out = vec![BigInt::zero(); cap + 1];
        for (i, a) in self.coeffs[..=cap].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=cap - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn square(&self) -> TruncatedSeries {
        self.mul(self)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap().min(other.cap());
        let coeffs = (0..=cap).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; needs a constant term of 1 or -1 so that the
    /// coefficients stay integral.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0.abs().is_one()) {
            return Err(SeriesError::NonUnitConstantTerm(c0.clone()));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        out.push(c0.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            // c0 = ±1 is its own inverse
            out.push(-(c0 * acc));
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul(b)
}

pub fn series_reciprocal(p: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    p.reciprocal()
}

/// `R_{t,0}, …, R_{t,n}` from a height-indexed walk count.
pub fn r_coeffs(t: u32, n: usize) -> Vec<BigInt> {
    // row[h] counts walks at height h - n after the current number of steps
    let width = 2 * n + 3;
    let t = BigInt::from(t);
    let mut row = vec![BigInt::zero(); width];
    row[n + 1] = BigInt::one();
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); width];
        for h in 1..width - 1 {
            next[h] = &row[h - 1] + &row[h + 1] + &row[h] * &t;
        }
        row = next;
        out.push(row[n + 1].clone());
    }
    out
}

/// `Σ R_{t,i} X^i` up to degree `n`.
pub fn r_series(t: u32, n: usize) -> TruncatedSeries {
    TruncatedSeries::new(r_coeffs(t, n), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{binomial, count_walks, enumerate_walks, LengthCaps};
    use crate::walks::Alphabet;
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_string().parse().unwrap()).collect()
    }

    /// Constant term of `(X⁻¹ + t + X)^i` summed over the number `k` of
    /// up/down pairs.
    fn r_closed_form(t: u32, i: usize) -> BigInt {
        let i = i as i64;
        (0..=i / 2)
            .map(|k| {
                BigInt::from(binomial(i, 2 * k))
                    * BigInt::from(binomial(2 * k, k))
                    * BigInt::from(t).pow((i - 2 * k) as u32)
            })
            .sum()
    }

    #[test]
    fn r_examples() {
        let as_i64 = |v: Vec<BigInt>| v.iter().map(|c| c.to_string().parse::<i64>().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(r_coeffs(1, 7)), [1, 1, 3, 7, 19, 51, 141, 393]);
        assert_eq!(as_i64(r_coeffs(0, 4)), [1, 0, 2, 0, 6]);
        assert_eq!(r_coeffs(2, 2)[2], BigInt::from(6));
    }

    #[test]
    fn r_matches_closed_form_and_census() {
        for t in 0..=5 {
            let r = r_coeffs(t, 24);
            for (i, c) in r.iter().enumerate() {
                assert_eq!(*c, r_closed_form(t, i), "t={t} i={i}");
            }
        }
        let caps = LengthCaps::default();
        for t in 0..=2 {
            for (len, r_len) in r_coeffs(t, 10).iter().enumerate() {
                let alphabet = Alphabet::new(t);
                let enumerated = enumerate_walks(len, alphabet, &caps).unwrap().filter(|w| w.is_recurrent()).count();
                assert_eq!(*r_len, BigInt::from(enumerated), "t={t} len={len}");
                assert_eq!(*r_len, BigInt::from(count_walks(len, alphabet, false, Some(0))));
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        let p = TruncatedSeries::from_i64(&[1, 1], 4);
        let q = TruncatedSeries::from_i64(&[1, -1], 4);
        assert_eq!(ints(&series_mul(&p, &q)), [1, 0, -1, 0, 0]);
        let geo = series_reciprocal(&TruncatedSeries::from_i64(&[1, -4], 5)).unwrap();
        assert_eq!(ints(&geo), [1, 4, 16, 64, 256, 1024]);
        let r = series_reciprocal(&TruncatedSeries::from_i64(&[1, -2, -3], 3)).unwrap();
        assert_eq!(ints(&r), [1, 2, 7, 20]);
        let neg = series_reciprocal(&TruncatedSeries::from_i64(&[-1, 1], 3)).unwrap();
        assert_eq!(ints(&neg), [-1, -1, -1, -1]);
        assert_eq!(
            series_reciprocal(&TruncatedSeries::from_i64(&[2, 1], 3)),
            Err(SeriesError::NonUnitConstantTerm(BigInt::from(2)))
        );
        assert_eq!(ints(&(&p + &q)), [2, 0, 0, 0, 0]);
        assert_eq!(p.mul(&TruncatedSeries::one(2)).cap(), 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn reciprocal_is_inverse(
            unit in prop::bool::ANY,
            tail in prop::collection::vec(-1000i64..1000, 0..33),
        ) {
            let mut coeffs = vec![if unit { 1 } else { -1 }];
            coeffs.extend(tail);
            let p = TruncatedSeries::from_i64(&coeffs, 32);
            let inv = p.reciprocal().unwrap();
            prop_assert_eq!(p.mul(&inv), TruncatedSeries::one(32));
        }
    }
}
