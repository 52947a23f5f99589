use num_bigint::BigInt;
use num_traits::Zero;

use crate::census::{binomial, count_walks, enumerate_walks, CensusError, IdentityReport, LengthCaps};
use crate::walks::Alphabet;

use super::{r_coeffs, r_series, TruncatedSeries};

/// Values of `t` at which the `t`-dependent identities are checked unless
/// told otherwise.
pub const DEFAULT_T_VALUES: [u32; 5] = [0, 1, 2, 3, 5];

fn convolve(a: &[BigInt], n: usize) -> BigInt {
    (0..=n).map(|i| &a[i] * &a[n - i]).sum()
}

/// `Σ_{i+j=n} C(2i,i) C(2j,j) = 4^n` for `n ≤ max`.
pub fn check_eq1(max: usize) -> IdentityReport {
    let central: Vec<BigInt> = (0..=max as i64).map(|i| BigInt::from(binomial(2 * i, i))).collect();
    let mut rep = IdentityReport::new("eq1");
    for n in 0..=max {
        rep.push(format!("n={n}"), convolve(&central, n), BigInt::from(4).pow(n as u32));
    }
    rep
}

/// `Σ_{i+j=l} R_{t,i} R_{t,j} = ((t+2)^{l+1} - (t-2)^{l+1}) / 4` for `l ≤ max`,
/// with the division required to be exact.
pub fn check_eq2(t: u32, max: usize) -> IdentityReport {
    let r = r_coeffs(t, max);
    let plus = BigInt::from(t) + 2i32;
    let minus = BigInt::from(t) - 2i32;
    let mut rep = IdentityReport::new(format!("eq2 t={t}"));
    for l in 0..=max {
        let lhs = convolve(&r, l);
        let num = plus.pow(l as u32 + 1) - minus.pow(l as u32 + 1);
        let divisible = (&num % 4i32).is_zero();
        let rhs = &num / 4i32;
        let ok = divisible && lhs == rhs;
        if divisible {
            rep.push_with(format!("l={l}"), lhs, rhs, ok);
        } else {
            rep.push_with(format!("l={l}"), lhs, format!("{num}/4 (not an integer)"), false);
        }
    }
    rep
}

/// The left side of [`check_eq2`] against an enumeration of the walks of
/// length `l + 1` ending at a positive odd number.
pub fn check_eq2_census(t: u32, max: usize, caps: &LengthCaps) -> Result<IdentityReport, CensusError> {
    let r = r_coeffs(t, max);
    let alphabet = Alphabet::new(t);
    let mut rep = IdentityReport::new(format!("eq2-census t={t}"));
    for l in 0..=max {
        let odd_end = enumerate_walks(l + 1, alphabet, caps)?.filter(|w| w.end() > 0 && w.end() % 2 == 1).count();
        rep.push(format!("l={l}"), convolve(&r, l), odd_end);
    }
    Ok(rep)
}

/// `(Σ R_{t,i} X^i)^2 = 1 / (1 - 2tX + (t^2-4)X^2)` coefficient by coefficient
/// up to degree `max`.
pub fn check_eq3(t: u32, max: usize) -> IdentityReport {
    let t = i64::from(t);
    let lhs = r_series(t as u32, max).square();
    let rhs = TruncatedSeries::from_i64(&[1, -2 * t, t * t - 4], max).reciprocal().expect("constant term is 1");
    let mut rep = IdentityReport::new(format!("eq3 t={t}"));
    for n in 0..=max {
        rep.push(format!("X^{n}"), lhs.coeff(n), rhs.coeff(n));
    }
    rep
}

/// `R_{2,n} = C(2n,n)` for `n ≤ max`, with `R_{2,n}` taken both from the
/// series and from the exact walk count.
pub fn check_t2_coincidence(max: usize) -> IdentityReport {
    let r = r_coeffs(2, max);
    let mut rep = IdentityReport::new("t2");
    for (n, rn) in r.iter().enumerate() {
        let counted = BigInt::from(count_walks(n, Alphabet::new(2), false, Some(0)));
        let central = BigInt::from(binomial(2 * n as i64, n as i64));
        rep.push_with(format!("n={n}"), rn, &central, *rn == central && counted == central);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq1_examples() {
        let rep = check_eq1(2);
        assert_eq!(rep.lines(), ["OK eq1 n=0: 1 = 1", "OK eq1 n=1: 4 = 4", "OK eq1 n=2: 16 = 16"]);
        assert!(check_eq1(30).passed());
    }

    #[test]
    fn eq2_examples() {
        let rep = check_eq2(1, 2);
        assert_eq!(rep.entries[2].lhs, "7");
        assert_eq!(rep.entries[2].rhs, "7");
        let rep = check_eq2(0, 3);
        assert_eq!((rep.entries[3].lhs.as_str(), rep.entries[3].rhs.as_str()), ("0", "0"));
        assert_eq!((rep.entries[2].lhs.as_str(), rep.entries[2].rhs.as_str()), ("4", "4"));
        for t in DEFAULT_T_VALUES {
            assert!(check_eq2(t, 20).passed(), "t={t}");
        }
    }

    #[test]
    fn eq2_counts_odd_endpoints() {
        for t in 0..=1 {
            let rep = check_eq2_census(t, 10, &LengthCaps::default()).unwrap();
            assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn eq3_examples() {
        let coeffs = |t, n| check_eq3(t, n).entries.iter().map(|e| e.rhs.clone()).collect::<Vec<_>>();
        assert_eq!(coeffs(0, 4), ["1", "0", "4", "0", "16"]);
        assert_eq!(coeffs(2, 4), ["1", "4", "16", "64", "256"]);
        assert!(check_eq3(1, 6).passed());
        for t in DEFAULT_T_VALUES {
            assert!(check_eq3(t, 24).passed(), "t={t}");
        }
    }

    #[test]
    fn t2_examples() {
        let rep = check_t2_coincidence(20);
        assert!(rep.passed());
        assert_eq!(rep.entries[0].lhs, "1");
        assert_eq!(rep.entries[2].lhs, "6");
        assert_eq!(rep.entries[5].lhs, "252");
    }
}
