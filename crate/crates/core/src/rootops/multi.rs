//! The coordinate-wise bijection on Z^n: apply the one-dimensional flip rule
//! to each coordinate projection, negating only that coordinate of the
//! selected steps. Closure of the step set under single-coordinate negation
//! keeps every produced step in the set.

use super::{last_departures, record_down_steps, RootOpError};
use crate::walks::WalkNd;

/// Walks ending in {0,1}^n onto walks staying in the weakly positive orthant.
pub fn theorem2_forward(w: &WalkNd) -> Result<WalkNd, RootOpError> {
    if !w.ends_in_unit_cube() {
        return Err(RootOpError::NotInUnitCube { end: w.end() });
    }
    Ok(forward_in_order(w, 0..w.dim()))
}

/// Inverse of [`theorem2_forward`].
pub fn theorem2_inverse(w: &WalkNd) -> Result<WalkNd, RootOpError> {
    inverse_in_order(w, 0..w.dim())
}

pub(crate) fn forward_in_order(w: &WalkNd, coords: impl IntoIterator<Item = usize>) -> WalkNd {
    let mut cur = w.clone();
    for c in coords {
        let flips = record_down_steps(cur.projection(c).into_iter().map(i64::from));
        cur = cur.with_negated(c, &flips);
    }
    cur
}

pub(crate) fn inverse_in_order(w: &WalkNd, coords: impl IntoIterator<Item = usize>) -> Result<WalkNd, RootOpError> {
    if let Some(coord) = (0..w.dim()).find(|&c| w.heights(c).iter().any(|&h| h < 0)) {
        return Err(RootOpError::NotInOrthant { coord });
    }
    let mut cur = w.clone();
    for c in coords {
        let heights = cur.heights(c);
        let d = heights.last().copied().unwrap_or(0) / 2;
        let flips = last_departures(heights, 0, d);
        cur = cur.with_negated(c, &flips);
    }
    Ok(cur)
}
