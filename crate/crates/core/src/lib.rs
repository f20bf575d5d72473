//! Minimal unique substrings (MUSs) of byte strings.
//!
//! A substring is a MUS when it occurs exactly once while both of its
//! maximal proper substrings occur at least twice (the empty string counts
//! as occurring `n + 1` times). This crate
//!
//! * builds a suffix-array index ([`TextIndex`]) and enumerates `MUS(T)` in
//!   linear time after indexing ([`compute_mus`]);
//! * answers stabbing queries `MUS(T, i)` by binary search ([`MusSet::stab`]);
//! * checks the global bounds `|MUS(T)| <= n`, `|MUS(T)| <= 2m - 1` and the
//!   positional bound `max_i |MUS(T, i)| <= sqrt(12n + 18) - 2`
//!   ([`check_bounds`]);
//! * generates the family `T_m` with `m - 2` MUSs through one position
//!   ([`lowerbound`]);
//! * ships a brute-force oracle and empirical checkers for the periodicity
//!   fact and the two lemmas behind the positional bound ([`verify`]);
//! * measures how the MUS set reacts to single-character edits
//!   ([`sensitivity`]).
//!
//! Positions are 1-based everywhere in the public API.
//!
//! ```
//! use mustab::{compute_mus, Text, TextIndex};
//!
//! let idx = TextIndex::build(Text::from("banana")).unwrap();
//! let ms = compute_mus(&idx);
//! let found: Vec<_> = ms.iter().map(|m| (m.start, m.end)).collect();
//! assert_eq!(found, [(1, 1), (3, 5)]);
//! assert_eq!(ms.stab(4).unwrap().len(), 1);
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod index;
pub mod lowerbound;
pub mod mus;
pub mod output;
pub mod report;
pub mod sensitivity;
pub mod text;
pub mod verify;

pub use bounds::{check_bounds, rle_size, sqrt_bound, within_sqrt_bound, BoundReport};
pub use error::{Error, Result};
pub use index::TextIndex;
pub use lowerbound::{gen_lower, verify_lower, LowerBoundInstance};
pub use mus::{compute_mus, mus_of, MusInterval, MusSet};
pub use report::{VerificationReport, Violation};
pub use sensitivity::{
    apply_edit, sensitivity, sensitivity_scan, EditKind, EditOp, SensitivityRecord,
};
pub use text::{smallest_period, Text};
