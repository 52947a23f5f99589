use std::collections::HashSet;

use super::*;
use crate::census::{binomial, count_walks, enumerate_walks, enumerate_walks_nd, LengthCaps};
use crate::walks::{parse_walk, parse_walk_nd, Alphabet, StepSet, WalkNd};

fn w(s: &str) -> Walk1D {
    parse_walk(s, Alphabet::BINARY).unwrap()
}

fn tw(s: &str) -> Walk1D {
    parse_walk(s, Alphabet::TERNARY).unwrap()
}

fn all(len: usize, t: u32) -> Vec<Walk1D> {
    enumerate_walks(len, Alphabet::new(t), &LengthCaps::default()).unwrap().collect()
}

#[test]
fn raise_lower_examples() {
    assert_eq!(raise(&w("DU")).unwrap(), w("UU"));
    assert_eq!(raise(&w("DDUU")).unwrap(), w("DUUU"));
    assert_eq!(raise(&w("UD")), Err(RootOpError::MinimumIsZero));
    assert_eq!(lower(&w("UU")).unwrap(), w("DU"));
    assert_eq!(lower(&w("DUUU")).unwrap(), w("DDUU"));
    assert_eq!(lower(&w("UD")), Err(RootOpError::NotInImage));
    // the up-step after the last visit to the minimum, not the first one
    // leaving it; only the former is undone by raise
    assert_eq!(lower(&w("UDUU")).unwrap(), w("UDDU"));
    assert_eq!(raise(&w("UDDU")).unwrap(), w("UDUU"));
}

#[test]
fn theorem1_examples() {
    assert_eq!(theorem1_forward(&w("DDUU")).unwrap(), w("UUUU"));
    assert_eq!(theorem1_forward(&w("UD")).unwrap(), w("UD"));
    assert_eq!(theorem1_forward(&tw("DNU")).unwrap(), tw("UNU"));
    assert_eq!(theorem1_forward(&w("UU")), Err(RootOpError::BadEndpoint { end: 2 }));
    assert_eq!(theorem1_inverse(&w("UUUU")).unwrap(), w("DDUU"));
    assert_eq!(theorem1_inverse(&w("UUU")).unwrap(), w("DUU"));
    assert_eq!(theorem1_inverse(&w("UD")).unwrap(), w("UD"));
    assert_eq!(theorem1_inverse(&w("DU")), Err(RootOpError::NotPositive { min: -1 }));
}

#[test]
fn motzkin_examples() {
    let d = motzkin_decompose(&w("UD"));
    assert_eq!((d.depth, d.end), (0, 0));
    assert_eq!(d.motzkin, [w("UD")]);
    assert!(d.singles.is_empty());

    let d = motzkin_decompose(&w("DU"));
    assert_eq!(d.singles, [Step::Down, Step::Up]);
    assert!(d.motzkin.iter().all(|m| m.is_empty()));

    let d = motzkin_decompose(&w("DDUU"));
    assert_eq!(d.singles, [Step::Down, Step::Down, Step::Up, Step::Up]);
    assert_eq!(d.motzkin.len(), 5);
    assert_eq!(d.reassemble(), w("DDUU"));

    let d = motzkin_decompose(&tw("NDUDNUU"));
    assert_eq!(d.singles, [Step::Down, Step::Up, Step::Up]);
    assert_eq!(d.motzkin, [tw("N"), tw("UDN"), tw(""), tw("")]);
}

#[test]
fn small_map_examples() {
    assert_eq!(reverse_negate(&w("UUD")), w("UDD"));
    assert_eq!(reverse_negate(&w("")), w(""));
    assert_eq!(reverse_negate(&tw("N")), tw("N"));
    assert_eq!(full_lower(&w("UU")).unwrap(), w("DD"));
    assert_eq!(full_lower(&w("UD")).unwrap(), w("UD"));
    assert_eq!(full_lower(&w("")).unwrap(), w(""));
    assert_eq!(full_lower(&w("DU")), Err(RootOpError::NotPositive { min: -1 }));
}

#[test]
fn convolution_examples() {
    assert_eq!(concat_with_upstep(&w("DU"), &w("UD")).unwrap(), w("DUUUD"));
    assert_eq!(concat_with_upstep(&w(""), &w("")).unwrap(), w("U"));
    assert_eq!(concat_with_upstep(&w("UD"), &w("UU")).unwrap(), w("UDUUU"));
    assert_eq!(concat_with_upstep(&w("U"), &w("")), Err(RootOpError::NotRecurrent { end: 1 }));
    assert_eq!(concat_with_upstep(&w(""), &w("DU")), Err(RootOpError::SuffixNotPositive { min: -1 }));
    assert_eq!(concat_with_upstep(&w(""), &w("U")), Err(RootOpError::SuffixOddEnd { end: 1 }));
    assert_eq!(concat_with_upstep(&w(""), &tw("")), Err(RootOpError::AlphabetMismatch { left: 0, right: 1 }));

    assert_eq!(split_at_last_up_from_zero(&w("UUD")).unwrap(), (w(""), w("UD")));
    assert_eq!(split_at_last_up_from_zero(&w("DUUUD")).unwrap(), (w("DU"), w("UD")));
    assert_eq!(split_at_last_up_from_zero(&w("U")).unwrap(), (w(""), w("")));
    assert_eq!(split_at_last_up_from_zero(&w("UD")), Err(RootOpError::NotPositiveOdd { end: 0 }));
}

/// Domain and codomain of theorem 1 over every walk of a length; checks the
/// bijection, the endpoint law and the inverse.
fn theorem1_exhaustive(len: usize, t: u32) {
    let walks = all(len, t);
    let domain: Vec<&Walk1D> = walks.iter().filter(|x| x.is_almost_recurrent()).collect();
    let codomain = walks.iter().filter(|x| x.is_positive()).count();
    assert_eq!(domain.len(), codomain, "len {len} t {t}");
    let mut seen = HashSet::new();
    for x in domain {
        let y = theorem1_forward(x).unwrap();
        assert!(y.is_positive());
        assert_eq!(y.len(), x.len());
        assert_eq!(y.neutral_count(), x.neutral_count());
        assert_eq!(y.end(), 2 * x.depth() + x.end());
        assert_eq!(&theorem1_inverse(&y).unwrap(), x);
        assert!(seen.insert(y.to_string()), "collision at {x}");
    }
}

#[test]
fn theorem1_binary_exhaustive() {
    for len in 0..=14 {
        theorem1_exhaustive(len, 0);
    }
}

#[test]
fn theorem1_ternary_exhaustive() {
    for len in 0..=9 {
        theorem1_exhaustive(len, 1);
    }
}

#[test]
fn theorem1_is_iterated_raising() {
    for len in 0..=12 {
        for x in all(len, 0).iter().filter(|x| x.is_almost_recurrent()) {
            let (r, n) = raise_fully(x);
            assert_eq!(r, theorem1_forward(x).unwrap());
            assert_eq!(n as i64, x.depth());
        }
    }
}

#[test]
fn raise_and_lower_are_inverse() {
    for t in 0..=1 {
        let max = if t == 0 { 12 } else { 8 };
        for len in 0..=max {
            for x in all(len, t) {
                match raise(&x) {
                    Ok(y) => {
                        assert_eq!(y.end(), x.end() + 2);
                        assert_eq!(y.min(), x.min() + 1);
                        assert_eq!(lower(&y).unwrap(), x);
                    }
                    Err(_) => assert_eq!(x.min(), 0),
                }
                if let Ok(y) = lower(&x) {
                    assert_eq!(raise(&y).unwrap(), x);
                    assert_eq!(y.end(), x.end() - 2);
                }
            }
        }
    }
}

#[test]
fn lower_image_is_walks_with_minimum_below_end() {
    for len in 0..=12 {
        for x in all(len, 0) {
            assert_eq!(lower(&x).is_ok(), x.min() < x.end(), "{x}");
        }
    }
}

#[test]
fn motzkin_decomposition_invariants() {
    for t in 0..=1 {
        let max = if t == 0 { 12 } else { 8 };
        for len in 0..=max {
            for x in all(len, t) {
                let d = motzkin_decompose(&x);
                assert_eq!(d.reassemble(), x);
                assert_eq!(d.depth, x.depth());
                assert_eq!(d.motzkin.len(), d.singles.len() + 1);
                assert_eq!(d.down_singles() as i64, x.depth());
                let ups = d.singles.len() - d.down_singles();
                assert_eq!(ups as i64, x.end() + x.depth());
                assert!(d.motzkin.iter().all(|m| m.is_positive() && m.is_recurrent()), "{x}");
                let downs_first = d.singles.iter().skip_while(|s| **s == Step::Down).all(|s| *s == Step::Up);
                assert!(downs_first, "{x}");
            }
        }
    }
}

#[test]
fn theorem1_agrees_with_motzkin_singles() {
    // reversing the down-singles of the decomposition is an independent
    // description of the theorem-1 map
    for len in 0..=12 {
        for x in all(len, 0).iter().filter(|x| x.is_almost_recurrent()) {
            let positions = motzkin_single_positions(x);
            let downs: Vec<usize> = positions.into_iter().filter(|&p| x.steps()[p] == Step::Down).collect();
            assert_eq!(x.with_flipped(&downs), theorem1_forward(x).unwrap());
        }
    }
}

#[test]
fn reflections_send_end_to_minimum() {
    for len in 0..=12 {
        let walks = all(len, 0);
        let codomain = walks.iter().filter(|x| x.end() == x.min()).count();
        let positive: Vec<&Walk1D> = walks.iter().filter(|x| x.is_positive()).collect();
        assert_eq!(positive.len(), codomain);
        let mut by_lower = HashSet::new();
        let mut by_reverse = HashSet::new();
        for x in positive {
            let a = full_lower(x).unwrap();
            let b = reverse_negate(x);
            for y in [&a, &b] {
                assert_eq!(y.end(), -x.end());
                assert_eq!(y.end(), y.min());
            }
            assert_eq!(&reverse_negate(&b), x);
            assert!(by_lower.insert(a.to_string()));
            assert!(by_reverse.insert(b.to_string()));
        }
    }
}

#[test]
fn positive_counts_by_reflection() {
    // #positive walks ending at k equals C(n, (n+k)/2) - C(n, (n+k)/2 + 1)
    for n in 0..=14i64 {
        let mut total = 0u64;
        for k in (n % 2..=n).step_by(2) {
            let h = (n + k) / 2;
            let expected = binomial(n, h) - binomial(n, h + 1);
            let counted = all(n as usize, 0).iter().filter(|x| x.is_positive() && x.end() == k).count();
            assert_eq!(expected, counted.into(), "n {n} k {k}");
            total += counted as u64;
        }
        // all positive walks: C(n, ⌈n/2⌉)
        assert_eq!(binomial(n, (n + 1) / 2), total.into());
        assert_eq!(count_walks(n as usize, Alphabet::BINARY, true, None), total.into());
    }
}

fn theorem2_exhaustive(set: &StepSet, max: usize) {
    let caps = LengthCaps::default();
    for len in 0..=max {
        let walks: Vec<WalkNd> = enumerate_walks_nd(len, set, &caps).unwrap().collect();
        let domain: Vec<&WalkNd> = walks.iter().filter(|x| x.ends_in_unit_cube()).collect();
        let codomain = walks.iter().filter(|x| x.is_positive()).count();
        assert_eq!(domain.len(), codomain, "len {len}");
        let mut seen = HashSet::new();
        for x in domain {
            let y = theorem2_forward(x).unwrap();
            assert!(y.is_positive());
            assert!(y.steps().iter().all(|s| set.contains(s)));
            assert_eq!(&theorem2_inverse(&y).unwrap(), x);
            assert_eq!(multi::forward_in_order(x, (0..x.dim()).rev()), y);
            assert!(seen.insert(y.to_string()));
        }
    }
}

#[test]
fn theorem2_full_square() {
    theorem2_exhaustive(&StepSet::full(2), 6);
}

#[test]
fn theorem2_diagonal() {
    theorem2_exhaustive(&StepSet::diagonal_with_zero(2), 8);
}

#[test]
fn theorem2_examples() {
    let set = StepSet::full(2);
    let x = parse_walk_nd("-+.+0", &set).unwrap();
    assert_eq!(theorem2_forward(&x).unwrap().to_string(), "++.+0");
    let y = parse_walk_nd("++.+0", &set).unwrap();
    assert_eq!(theorem2_inverse(&y).unwrap(), x);
}

#[test]
fn convolution_is_bijective() {
    let caps = LengthCaps::default();
    for t in 0..=1 {
        let alphabet = Alphabet::new(t);
        let max = if t == 0 { 11 } else { 8 };
        for l in 0..=max {
            let mut seen = HashSet::new();
            for i in 0..=l {
                let prefixes: Vec<Walk1D> =
                    enumerate_walks(i, alphabet, &caps).unwrap().filter(|x| x.is_recurrent()).collect();
                let suffixes: Vec<Walk1D> = enumerate_walks(l - i, alphabet, &caps)
                    .unwrap()
                    .filter(|x| x.is_positive() && x.end() % 2 == 0)
                    .collect();
                for p in &prefixes {
                    for s in &suffixes {
                        let y = concat_with_upstep(p, s).unwrap();
                        assert_eq!(split_at_last_up_from_zero(&y).unwrap(), (p.clone(), s.clone()));
                        assert!(seen.insert(y.to_string()));
                    }
                }
            }
            let odd_end =
                enumerate_walks(l + 1, alphabet, &caps).unwrap().filter(|x| x.end() > 0 && x.end() % 2 == 1).count();
            assert_eq!(seen.len(), odd_end, "t {t} l {l}");
        }
    }
}
