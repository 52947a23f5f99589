use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};

use crate::census::{binomial, enumerate_ballots, CensusError, IdentityReport, LengthCaps};

use super::{ballot_counts, classify_ballot, Scenario};

/// Bertrand's count of good sequences written two ways: `C(μ-1,α-1) - C(μ-1,α)`
/// against the total number of cases minus twice the number of bad ones.
pub fn check_eq4(max_sum: usize) -> IdentityReport {
    let mut rep = IdentityReport::new("eq4");
    for mu in 1..=max_sum as i64 {
        for alpha in (mu / 2 + 1)..=mu {
            let good = BigInt::from(binomial(mu - 1, alpha - 1)) - BigInt::from(binomial(mu - 1, alpha));
            let rest = BigInt::from(binomial(mu, alpha)) - 2 * BigInt::from(binomial(mu - 1, alpha));
            rep.push(format!("alpha={alpha} beta={}", mu - alpha), good, rest);
        }
    }
    rep
}

/// Compares [`ballot_counts`] with a census of every sequence of at most
/// `max_sum` votes, for each `α > β`.
pub fn check_ballot_counts(max_sum: usize, caps: &LengthCaps) -> Result<IdentityReport, CensusError> {
    let mut rep = IdentityReport::new("ballot");
    for mu in 1..=max_sum {
        // (alpha, beta) -> [good, bad, ugly]
        let mut tally: BTreeMap<(usize, usize), [u64; 3]> = BTreeMap::new();
        for s in enumerate_ballots(mu, caps)? {
            if s.alpha() <= s.beta() {
                continue;
            }
            let slot = match classify_ballot(&s) {
                Ok(Scenario::Good) => 0,
                Ok(Scenario::Bad) => 1,
                Ok(Scenario::Ugly) => 2,
                Err(_) => continue,
            };
            tally.entry((s.alpha(), s.beta())).or_default()[slot] += 1;
        }
        for ((alpha, beta), [good, bad, ugly]) in tally {
            let c = ballot_counts(alpha, beta).expect("alpha > beta");
            let total = good + bad + ugly;
            let lhs = format!("total={} good={} bad={} ugly={}", c.total, c.good, c.bad, c.ugly);
            let rhs = format!("total={total} good={good} bad={bad} ugly={ugly}");
            let ok = lhs == rhs && c.good * BigUint::from(alpha + beta) == BigUint::from(total * (alpha - beta) as u64);
            rep.push_with(format!("alpha={alpha} beta={beta}"), lhs, rhs, ok);
        }
    }
    Ok(rep)
}
