//! Exact-arithmetic library for permutation and multipermutation codes in
//! the Ulam metric.
//!
//! The crate is organized around six modules:
//!
//! - [`perm`]: permutations, r-regular multipermutations, translocations,
//!   the right group action, and the Ulam distance via longest common
//!   subsequence.
//! - [`tableaux`]: integer partitions, hook lengths, standard-tableau
//!   counts, rectangular-content Kostka numbers, and RSK insertion.
//! - [`spheres`]: Ulam sphere sizes by closed form, by tableaux sums, by the
//!   radius-1 duplication-set formula, and by brute-force enumeration.
//! - [`binarycuts`]: the two-symbol case, where sphere sizes are governed by
//!   the lengths of maximal alternating substrings ("cuts") and the optimal
//!   cut count sits next to sqrt(r).
//! - [`bounds`]: code-size bounds (sphere packing, Gilbert–Varshamov type)
//!   and the perfect-code feasibility pipeline.
//! - [`codesim`]: greedy maximal code construction, minimum-distance
//!   verification, and a seeded translocation-channel simulator.
//!
//! Counts are exact big integers and bound ratios are exact rationals; the
//! only floating-point values in the crate are the binary-case sphere-size
//! envelopes `U(r)` and `L(r)`.

pub mod binarycuts;
pub mod bounds;
pub mod codesim;
pub mod error;
pub mod numeric;
pub mod perm;
pub mod spheres;
pub mod tableaux;

pub use error::{Error, Result};
pub use perm::{Multipermutation, Permutation, Translocation};
