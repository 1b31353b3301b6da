//! Cyclic codes over finite commutative chain rings.
//!
//! The crate builds chain rings of the shapes `Z_{p^a}` and `F_{p^m}[v]/(v^e)`,
//! works with polynomials in `R[z]/(z^n - 1)`, enumerates cyclic codes as ideals,
//! and decides whether a code is reversible or `(u,k)` reversible complement.
//! Every structural decision is made twice: once through the minimal-degree
//! generating set of the code and once by brute force over all codewords.

pub mod analysis;
pub mod census;
pub mod code;
pub mod error;
pub mod expr;
pub mod poly;
pub mod report;
pub mod ring;

pub use analysis::{Condition, Verdict, VerdictDetail};
pub use census::{ClassificationRow, OracleMode};
pub use code::{CyclicCode, GeneratorEntry};
pub use error::{Error, Result};
pub use poly::{CyclicPoly, PolyRing};
pub use ring::{ChainRing, Elem, Family};

/// Largest ring accepted by [`ChainRing::parse`] unless a different bound is given.
pub const DEFAULT_RING_BOUND: u64 = 1 << 16;

/// Largest ambient space `|R|^n` that code enumeration will walk by default.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 24;
