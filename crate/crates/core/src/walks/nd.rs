//! Walks on Z^n over a step set S ⊆ {-1,0,1}^n.

use std::collections::BTreeSet;
use std::fmt;

use super::WalkError;

/// A step of an n-dimensional walk; every coordinate is -1, 0 or +1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepNd(Vec<i8>);

impl StepNd {
    pub fn new(deltas: Vec<i8>) -> Result<Self, WalkError> {
        if deltas.iter().any(|d| !(-1..=1).contains(d)) {
            return Err(WalkError::MalformedStep(format!("{deltas:?} has a coordinate outside -1..=1")));
        }
        Ok(StepNd(deltas))
    }

    pub fn deltas(&self) -> &[i8] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn with_negated(&self, coord: usize) -> StepNd {
        let mut d = self.0.clone();
        d[coord] = -d[coord];
        StepNd(d)
    }

    fn parse(group: &str) -> Result<Self, WalkError> {
        let deltas = group
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '0' => Ok(0),
                '-' => Ok(-1),
                other => Err(WalkError::MalformedStep(format!("unexpected {other:?} in step group {group:?}"))),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        Ok(StepNd(deltas))
    }
}

impl fmt::Display for StepNd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            f.write_str(match d {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}

/// A set of allowed steps, closed under negation of any single coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSet {
    dim: usize,
    members: BTreeSet<StepNd>,
}

impl StepSet {
    pub fn new(dim: usize, members: impl IntoIterator<Item = StepNd>) -> Result<Self, WalkError> {
        let members: BTreeSet<StepNd> = members.into_iter().collect();
        for step in &members {
            if step.dim() != dim {
                return Err(WalkError::DimensionMismatch { expected: dim, found: step.dim() });
            }
            for coord in 0..dim {
                if !members.contains(&step.with_negated(coord)) {
                    return Err(WalkError::NotClosed { step: step.to_string(), coord });
                }
            }
        }
        Ok(StepSet { dim, members })
    }

    /// The full set {-1,0,1}^n.
    pub fn full(dim: usize) -> Self {
        let mut members = vec![Vec::new()];
        for _ in 0..dim {
            members = members
                .into_iter()
                .flat_map(|p: Vec<i8>| {
                    [-1i8, 0, 1].into_iter().map(move |d| {
                        let mut q = p.clone();
                        q.push(d);
                        q
                    })
                })
                .collect();
        }
        StepSet { dim, members: members.into_iter().map(StepNd).collect() }
    }

    /// {(±1, …, ±1)} together with the zero step.
    pub fn diagonal_with_zero(dim: usize) -> Self {
        let members = StepSet::full(dim)
            .members
            .into_iter()
            .filter(|s| s.0.iter().all(|&d| d != 0) || s.0.iter().all(|&d| d == 0))
            .collect();
        StepSet { dim, members }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, step: &StepNd) -> bool {
        self.members.contains(step)
    }

    /// Members in sorted order.
    pub fn members(&self) -> impl Iterator<Item = &StepNd> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Parses the step-set file format: one step per line in the `+0-`
/// encoding, `#` comments, blank lines ignored.
pub fn parse_step_set(text: &str) -> Result<StepSet, WalkError> {
    let mut steps = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        steps.push(StepNd::parse(line)?);
    }
    let dim = match steps.first() {
        Some(s) => s.dim(),
        None => return Err(WalkError::MalformedStep("step set file has no steps".into())),
    };
    StepSet::new(dim, steps)
}

/// A walk on Z^n starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkNd {
    dim: usize,
    steps: Vec<StepNd>,
    // heights[c][j] is coordinate c after j steps
    heights: Vec<Vec<i64>>,
}

impl WalkNd {
    pub fn new(steps: Vec<StepNd>, set: &StepSet) -> Result<Self, WalkError> {
        for s in &steps {
            if s.dim() != set.dim() {
                return Err(WalkError::DimensionMismatch { expected: set.dim(), found: s.dim() });
            }
            if !set.contains(s) {
                return Err(WalkError::StepNotInSet(s.to_string()));
            }
        }
        Ok(Self::from_steps_unchecked(set.dim(), steps))
    }

    pub(crate) fn from_steps_unchecked(dim: usize, steps: Vec<StepNd>) -> Self {
        let heights = (0..dim)
            .map(|c| {
                let mut h = 0i64;
                let mut col = Vec::with_capacity(steps.len() + 1);
                col.push(0);
                for s in &steps {
                    h += i64::from(s.0[c]);
                    col.push(h);
                }
                col
            })
            .collect();
        WalkNd { dim, steps, heights }
    }

    pub fn empty(dim: usize) -> Self {
        Self::from_steps_unchecked(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[StepNd] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height profile of coordinate `c`.
    pub fn heights(&self, c: usize) -> &[i64] {
        &self.heights[c]
    }

    /// Deltas of coordinate `c`, one per step.
    pub fn projection(&self, c: usize) -> Vec<i8> {
        self.steps.iter().map(|s| s.0[c]).collect()
    }

    pub fn end(&self) -> Vec<i64> {
        self.heights.iter().map(|col| *col.last().unwrap()).collect()
    }

    /// Ends at a vertex of the unit hypercube {0,1}^n.
    pub fn ends_in_unit_cube(&self) -> bool {
        self.end().iter().all(|e| matches!(e, 0 | 1))
    }

    /// Stays in the weakly positive orthant.
    pub fn is_positive(&self) -> bool {
        self.heights.iter().all(|col| col.iter().all(|&h| h >= 0))
    }

    pub(crate) fn with_negated(&self, coord: usize, positions: &[usize]) -> WalkNd {
        let mut steps = self.steps.clone();
        for &p in positions {
            steps[p] = steps[p].with_negated(coord);
        }
        WalkNd::from_steps_unchecked(self.dim, steps)
    }
}

impl fmt::Display for WalkNd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Parses `.`-separated groups of `n` characters over `+`, `0`, `-`.
pub fn parse_walk_nd(text: &str, set: &StepSet) -> Result<WalkNd, WalkError> {
    if text.is_empty() {
        return Ok(WalkNd::empty(set.dim()));
    }
    let steps = text
        .split('.')
        .map(|group| {
            let step = StepNd::parse(group)?;
            if step.dim() != set.dim() {
                return Err(WalkError::MalformedStep(format!(
                    "group {group:?} has {} coordinates, expected {}",
                    step.dim(),
                    set.dim()
                )));
            }
            Ok(step)
        })
        .collect::<Result<Vec<_>, _>>()?;
    WalkNd::new(steps, set)
}

pub fn format_walk_nd(walk: &WalkNd) -> String {
    walk.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(d: &[i8]) -> StepNd {
        StepNd::new(d.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let full = StepSet::full(2);
        let w = parse_walk_nd("-+.+0", &full).unwrap();
        assert_eq!(w.steps(), &[step(&[-1, 1]), step(&[1, 0])]);
        assert_eq!(w.heights(0), &[0, -1, 0]);
        assert_eq!(w.heights(1), &[0, 1, 1]);
        assert_eq!(format_walk_nd(&w), "-+.+0");

        let empty = parse_walk_nd("", &full).unwrap();
        assert!(empty.is_empty());
        assert_eq!(format_walk_nd(&empty), "");
    }

    #[test]
    fn step_not_in_set() {
        let axis = StepSet::new(2, [step(&[0, 0]), step(&[1, 0]), step(&[-1, 0])]).unwrap();
        assert_eq!(parse_walk_nd("+-", &axis), Err(WalkError::StepNotInSet("+-".into())));
        assert!(matches!(parse_walk_nd("+", &axis), Err(WalkError::MalformedStep(_))));
        assert!(matches!(parse_walk_nd("+x", &axis), Err(WalkError::MalformedStep(_))));
        assert!(matches!(parse_walk_nd("00..00", &axis), Err(WalkError::MalformedStep(_))));
    }

    #[test]
    fn rejects_asymmetric_sets() {
        let err = StepSet::new(2, [step(&[1, 1]), step(&[-1, -1])]).unwrap_err();
        assert!(matches!(err, WalkError::NotClosed { .. }));
        assert!(StepSet::new(1, [step(&[1])]).is_err());
        assert!(StepSet::new(2, [step(&[1])]).is_err());
    }

    #[test]
    fn builtin_sets() {
        assert_eq!(StepSet::full(2).len(), 9);
        let diag = StepSet::diagonal_with_zero(2);
        assert_eq!(diag.len(), 5);
        assert!(StepSet::new(2, diag.members().cloned()).is_ok());
    }

    #[test]
    fn step_set_file() {
        let text = "# axis steps\n+0\n\n-0\n00\n";
        let set = parse_step_set(text).unwrap();
        assert_eq!(set.dim(), 2);
        assert_eq!(set.len(), 3);
        assert!(parse_step_set("# nothing\n").is_err());
        assert!(matches!(parse_step_set("++\n"), Err(WalkError::NotClosed { .. })));
    }
}
