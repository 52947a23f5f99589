//! Walks on the integers and on `Z^n`, the raising and lowering root
//! operators, ballot-sequence bijections, exhaustive censuses and exact
//! power-series identities.
//!
//! ```
//! use walkbij::rootops::theorem1_forward;
//! use walkbij::walks::{parse_walk, Alphabet};
//!
//! let w = parse_walk("DDUU", Alphabet::BINARY).unwrap();
//! assert_eq!(theorem1_forward(&w).unwrap().to_string(), "UUUU");
//! ```

pub mod ballot;
pub mod census;
pub mod cli;
pub mod rootops;
pub mod series;
pub mod walks;
