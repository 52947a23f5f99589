//! Pascal, trinomial and positive-walk triangles.
//!
//! Each table is built twice: once by the row recurrence (every interior
//! entry is the sum of the entries above it, neutral steps weighted by `t`),
//! and once independently: positive tables by subtracting the unrestricted
//! table shifted two places, the others by their closed form. The two must
//! agree entry-wise.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{binomial, CensusError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Pascal,
    /// Coefficients of `(X⁻¹ + t + X)^n`.
    Trinomial(u32),
    /// Walks on N with `t` neutral kinds, by end point.
    Positive(u32),
}

impl TriangleKind {
    fn t(self) -> u32 {
        match self {
            TriangleKind::Pascal => 0,
            TriangleKind::Trinomial(t) | TriangleKind::Positive(t) => t,
        }
    }

    fn positive(self) -> bool {
        matches!(self, TriangleKind::Positive(_))
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleKind::Pascal => f.write_str("pascal"),
            TriangleKind::Trinomial(t) => write!(f, "trinomial(t={t})"),
            TriangleKind::Positive(t) => write!(f, "positive(t={t})"),
        }
    }
}

/// One row of a triangle: `values[i]` counts walks ending at `ends[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    pub ends: Vec<i64>,
    pub values: Vec<BigUint>,
}

impl TriangleRow {
    pub fn sum(&self) -> BigUint {
        self.values.iter().sum()
    }

    pub fn get(&self, end: i64) -> BigUint {
        self.ends.iter().position(|&e| e == end).map(|i| self.values[i].clone()).unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    pub kind: TriangleKind,
    pub rows: Vec<TriangleRow>,
}

impl TriangleTable {
    /// Header line, then one tab-separated line of values per row.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("kind={}\tt={}\trows={}\n", kind_name(self.kind), self.kind.t(), self.rows.len());
        for row in &self.rows {
            let cells: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }
}

fn kind_name(kind: TriangleKind) -> &'static str {
    match kind {
        TriangleKind::Pascal => "pascal",
        TriangleKind::Trinomial(_) => "trinomial",
        TriangleKind::Positive(_) => "positive",
    }
}

/// Ends displayed in row `n`: same parity as `n` when `t = 0`.
fn row_ends(kind: TriangleKind, n: usize) -> Vec<i64> {
    let n = n as i64;
    let lo = if kind.positive() { 0 } else { -n };
    let step = if kind.t() == 0 { 2 } else { 1 };
    let first = if kind.t() == 0 && (lo - n) % 2 != 0 { lo + 1 } else { lo };
    (first..=n).step_by(step).collect()
}

/// Dense rows indexed by `end + offset` built by the recurrence.
fn by_recurrence(kind: TriangleKind, rows: usize) -> Vec<Vec<BigUint>> {
    let offset = rows;
    let width = 2 * rows + 3;
    let t = BigUint::from(kind.t());
    let mut out = Vec::with_capacity(rows);
    let mut cur = vec![BigUint::zero(); width];
    cur[offset] = BigUint::from(1u32);
    for _ in 0..rows {
        let mut next = vec![BigUint::zero(); width];
        for i in 1..width - 1 {
            let end = i as i64 - offset as i64;
            if kind.positive() && end < 0 {
                continue;
            }
            next[i] = &cur[i - 1] + &cur[i + 1] + &cur[i] * &t;
        }
        out.push(std::mem::replace(&mut cur, next));
    }
    out
}

/// Coefficient of `X^e` in `(X⁻¹ + t + X)^n`: sum over the number `u` of
/// up-steps, with `u - e` down-steps and the rest neutral.
fn trinomial_closed_form(n: usize, e: i64, t: u32) -> BigUint {
    let n = n as i64;
    let mut total = BigUint::zero();
    for u in 0..=n {
        let down = u - e;
        let neutral = n - u - down;
        if down < 0 || neutral < 0 {
            continue;
        }
        if t == 0 && neutral > 0 {
            continue;
        }
        total += binomial(n, u) * binomial(n - u, down) * BigUint::from(t).pow(neutral as u32);
    }
    total
}

fn independent_value(kind: TriangleKind, n: usize, e: i64) -> BigUint {
    match kind {
        TriangleKind::Pascal => binomial(n as i64, (n as i64 + e) / 2),
        TriangleKind::Trinomial(t) => trinomial_closed_form(n, e, t),
        TriangleKind::Positive(t) => trinomial_closed_form(n, e, t) - trinomial_closed_form(n, e + 2, t),
    }
}

/// Rows `0..rows` of the triangle of `kind`.
pub fn triangle(kind: TriangleKind, rows: usize) -> Result<TriangleTable, CensusError> {
    let dense = by_recurrence(kind, rows);
    let offset = rows as i64;
    let mut out = Vec::with_capacity(rows);
    for (n, cells) in dense.iter().enumerate() {
        let ends = row_ends(kind, n);
        let values: Vec<BigUint> = ends.iter().map(|&e| cells[(e + offset) as usize].clone()).collect();
        let check: Vec<BigUint> = ends.iter().map(|&e| independent_value(kind, n, e)).collect();
        if values != check {
            return Err(CensusError::TableMismatch { kind: kind.to_string(), row: n });
        }
        out.push(TriangleRow { ends, values });
    }
    Ok(TriangleTable { kind, rows: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(kind: TriangleKind, n: usize) -> Vec<u64> {
        let table = triangle(kind, n + 1).unwrap();
        table.rows[n].values.iter().map(|v| v.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn published_rows() {
        assert_eq!(row(TriangleKind::Pascal, 8), [1, 8, 28, 56, 70, 56, 28, 8, 1]);
        assert_eq!(row(TriangleKind::Pascal, 10), [1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1]);
        assert_eq!(row(TriangleKind::Trinomial(1), 7), [1, 7, 28, 77, 161, 266, 357, 393, 357, 266, 161, 77, 28, 7, 1]);
        assert_eq!(row(TriangleKind::Positive(0), 4), [2, 3, 1]);
        assert_eq!(row(TriangleKind::Positive(0), 8), [14, 28, 20, 7, 1]);
        assert_eq!(row(TriangleKind::Positive(0), 10), [42, 90, 75, 35, 9, 1]);
        assert_eq!(row(TriangleKind::Positive(1), 7), [127, 196, 189, 133, 70, 27, 7, 1]);
    }

    #[test]
    fn positive_row_sums() {
        let pos = triangle(TriangleKind::Positive(0), 31).unwrap();
        let pascal = triangle(TriangleKind::Pascal, 31).unwrap();
        for n in 0..31 {
            let central = pascal.rows[n].get(if n % 2 == 0 { 0 } else { 1 });
            assert_eq!(pos.rows[n].sum(), central, "row {n}");
        }
        let pos1 = triangle(TriangleKind::Positive(1), 31).unwrap();
        let tri1 = triangle(TriangleKind::Trinomial(1), 31).unwrap();
        for n in 0..31 {
            assert_eq!(pos1.rows[n].sum(), tri1.rows[n].get(0) + tri1.rows[n].get(1), "row {n}");
        }
        assert_eq!(pos1.rows[7].sum(), BigUint::from(750u32));
    }

    #[test]
    fn both_constructions_agree() {
        for t in 0..=2 {
            triangle(TriangleKind::Trinomial(t), 31).unwrap();
            triangle(TriangleKind::Positive(t), 31).unwrap();
        }
        triangle(TriangleKind::Pascal, 31).unwrap();
    }

    #[test]
    fn tsv() {
        let tsv = triangle(TriangleKind::Positive(0), 9).unwrap().to_tsv();
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines.len(), 10);
        assert_eq!(lines[0], "kind=positive\tt=0\trows=9");
        assert_eq!(lines[9], "14\t28\t20\t7\t1");
        assert_eq!(lines[1], "1");
    }
}
