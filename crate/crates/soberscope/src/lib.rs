//! Checkers for specialization order, the sobriety hierarchy, the
//! irreducibly-derived (SI) topology, the space of sup-bounded irreducible
//! closed sets and its quotient, and the reflection of T0 spaces into
//! k-bounded sober spaces.
//!
//! Finite spaces are handled by exhaustive enumeration; the classic
//! countable counterexample posets (Johnstone-style grids with added tops,
//! and chains of shape ω+1) are handled by an exact symbolic engine over
//! finitely described closed sets. Every nontrivial claim the library
//! exposes is either checked outright or cross-validated against an
//! independent brute-force oracle in the test suite.

pub mod constructions;
pub mod error;
pub mod gen;
pub mod johnstone;
pub mod map;
pub mod poset;
pub mod report;
pub mod set;
pub mod sobriety;
pub mod space;

pub use error::{ContractError, InputError, LibraryBug};
pub use map::SpaceMap;
pub use poset::FinitePoset;
pub use set::Subset;
pub use space::{
    alexandroff, product, scott_finite, validate_topology, FiniteSpace, IrreducibleRecord,
    SpaceError, TopologyViolation,
};
