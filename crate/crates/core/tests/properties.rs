//! Randomised checks on walks longer than exhaustive enumeration reaches.

use proptest::prelude::*;

use walkbij::ballot::{lift, unstrip, UglyToBad, Vote};
use walkbij::rootops::{
    concat_with_upstep, lower, motzkin_decompose, raise, raise_fully, split_at_last_up_from_zero, theorem1_forward,
    theorem1_inverse,
};
use walkbij::walks::{Alphabet, Step, Walk1D};

fn walk(t: u32, max_len: usize) -> impl Strategy<Value = Walk1D> {
    let steps = Alphabet::new(t).steps();
    prop::collection::vec(prop::sample::select(steps), 0..=max_len)
        .prop_map(move |s| Walk1D::new(s, Alphabet::new(t)).unwrap())
}

/// Appends steps so that the walk ends at 0 or 1.
fn close(w: &Walk1D) -> Walk1D {
    let mut steps = w.steps().to_vec();
    let mut h = w.end();
    while h > 1 {
        steps.push(Step::Down);
        h -= 1;
    }
    while h < 0 {
        steps.push(Step::Up);
        h += 1;
    }
    Walk1D::new(steps, w.alphabet()).unwrap()
}

proptest! {
    #[test]
    fn theorem1_round_trip(w in (0u32..4).prop_flat_map(|t| walk(t, 150))) {
        let x = close(&w);
        let y = theorem1_forward(&x).unwrap();
        prop_assert!(y.is_positive());
        prop_assert_eq!(y.end(), 2 * x.depth() + x.end());
        prop_assert_eq!(y.neutral_count(), x.neutral_count());
        prop_assert_eq!(&theorem1_inverse(&y).unwrap(), &x);
        let (r, n) = raise_fully(&x);
        prop_assert_eq!(r, y);
        prop_assert_eq!(n as i64, x.depth());
    }

    #[test]
    fn raise_lower_round_trip(w in walk(1, 150)) {
        if let Ok(y) = raise(&w) {
            prop_assert_eq!(lower(&y).unwrap(), w.clone());
        }
        if let Ok(y) = lower(&w) {
            prop_assert_eq!(raise(&y).unwrap(), w);
        }
    }

    #[test]
    fn motzkin_reassembles(w in walk(2, 150)) {
        let d = motzkin_decompose(&w);
        prop_assert_eq!(d.reassemble(), w.clone());
        prop_assert_eq!(d.down_singles() as i64, w.depth());
        prop_assert!(d.motzkin.iter().all(|m| m.is_positive() && m.is_recurrent()));
    }

    #[test]
    fn split_undoes_concat(a in walk(1, 60), b in walk(1, 60)) {
        let prefix = {
            let mut s = a.steps().to_vec();
            let mut h = a.end();
            while h != 0 {
                s.push(if h > 0 { Step::Down } else { Step::Up });
                h -= h.signum();
            }
            Walk1D::new(s, a.alphabet()).unwrap()
        };
        let suffix = theorem1_forward(&close(&b)).unwrap();
        let suffix = if suffix.end() % 2 == 0 {
            suffix
        } else {
            Walk1D::concat([suffix.steps(), &[Step::Up][..]], suffix.alphabet())
        };
        let joined = concat_with_upstep(&prefix, &suffix).unwrap();
        prop_assert_eq!(split_at_last_up_from_zero(&joined).unwrap(), (prefix, suffix));
    }

    #[test]
    fn lifted_raise_is_theorem1(w in walk(0, 40)) {
        let x = close(&w);
        let out = lift(UglyToBad::Raise, &unstrip(Vote::A, &x).unwrap()).unwrap();
        prop_assert_eq!(out.sequence, unstrip(Vote::A, &theorem1_forward(&x).unwrap()).unwrap());
        prop_assert_eq!(out.iterations as i64, x.depth());
    }
}
