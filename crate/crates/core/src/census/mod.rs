//! Exhaustive enumeration, exact counting, triangle tables and the
//! verification engine that checks bijections and identities over every
//! object of a given size.

mod checks;
mod count;
mod distribution;
mod enumerate;
mod report;
mod table;

pub use checks::{run_check, Check, CheckContext, CheckOutcome};
pub use count::{binomial, count_walks, count_walks_nd, end_counts, trinomial_row, NdPopulation};
pub use distribution::{distribution, Population, Stat};
pub use enumerate::{enumerate_ballots, enumerate_walks, enumerate_walks_nd, LengthCaps, Odometer};
pub use report::{verify_bijection, IdentityEntry, IdentityReport, Preserved, VerificationReport};
pub use table::{triangle, TriangleKind, TriangleRow, TriangleTable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("CapExceeded: length {length} exceeds the cap {cap} for {what}")]
    CapExceeded { length: usize, cap: usize, what: String },
    #[error("UnknownMap: {0}")]
    UnknownMap(String),
    #[error("UnknownStat: {0}")]
    UnknownStat(String),
    #[error("UnknownPopulation: {0}")]
    UnknownPopulation(String),
    #[error("Unsupported: {0}")]
    Unsupported(String),
    #[error("TableMismatch: {kind} row {row} differs between recurrence and reflection")]
    TableMismatch { kind: String, row: usize },
}
