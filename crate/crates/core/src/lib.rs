//! Exact combinatorics of the generating operator G = g_1 + ... + g_N +
//! g_1^-1 + ... + g_N^-1 of the free group F_N:
//!
//! - [`recurrence`]: expansions of G^n over word-length spheres and the
//!   moment series tau(G^n), by the one-step multiplication rule.
//! - [`nc`]: the noncrossing-partition lattice — enumeration, Kreweras
//!   complement, and the Möbius function by two independent algorithms.
//! - [`transform`]: moment/cumulant Möbius inversion and the R-transform
//!   coefficients of G, by lattice enumeration and by a fast recursion.
//! - [`oracle`]: independent verification by direct free-group walk counting,
//!   sharing no code with the recurrence engine.
//! - [`verify`]: the full cross-check matrix, including the comparison
//!   against the published eighth-power coefficients (which fail the mass
//!   checksum; the corrected values are confirmed by both oracles).
//!
//! All arithmetic is exact: scalars are arbitrary-precision integers, so
//! every comparison in the test suite is an equality test.

pub mod error;
pub mod expansion;
pub mod group;
pub mod nc;
pub mod oracle;
pub mod output;
pub mod recurrence;
pub mod series;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use group::GroupParameter;
