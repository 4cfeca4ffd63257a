//! Realizability of Laurent passports.
//!
//! A *Laurent passport* is a collection of `q` integer partitions of a degree
//! `n` satisfying the Riemann-Hurwitz count, one of which has exactly two
//! parts `{s, n-s}`. Such a passport is the candidate branch datum of a
//! Laurent polynomial, or equivalently the candidate valency datum of a
//! two-face planar constellation.
//!
//! The crate provides:
//!
//! * [`passport`]: validation, canonical ordering, derived statistics and
//!   exhaustive enumeration of Laurent passports at small degree;
//! * [`constellation`]: the permutation-tuple model of planar
//!   constellations: face tracing, genus, transitivity and verification of a
//!   tuple against a passport;
//! * [`decision`]: constant-time realizability classification: every
//!   passport with `q > 3` is realizable, and for `q = 3` realizability fails
//!   exactly on seven explicit families;
//! * [`builder`]: construction of an explicit witness tuple for every
//!   realizable passport (sunflower base cycle, branch shifting, bounded
//!   subset-sum placement, parity repair);
//! * [`oracle`]: an independent brute-force decision procedure by exhaustive
//!   symmetry-reduced search over permutation tuples, used as ground truth at
//!   small degree.

pub mod builder;
pub mod constellation;
pub mod decision;
pub mod oracle;
pub mod passport;

pub use builder::{build, BuildError};
pub use constellation::{ConstellationTuple, Perm, ValencyDatum, VerifyReport};
pub use decision::{classify, Verdict};
pub use oracle::{oracle_decide, OracleResult, SearchBudget};
pub use passport::{
    canonicalize, derived, enumerate_passports, gop_sides, validate, ColorRelabeling,
    DerivedStats, LaurentPassport, Partition, RawPassport, Violation,
};
