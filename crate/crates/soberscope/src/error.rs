//! Error types shared across the crate.

use thiserror::Error;

/// Malformed input: bad identifiers, out-of-range elements, oversized
/// carriers. Distinct from contract errors, which flag inputs that are
/// well-formed but outside an operation's stated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("duplicate carrier identifier `{name}`")]
    DuplicateIdentifier { name: String },
    #[error("unknown element `{name}`")]
    UnknownElement { name: String },
    #[error("carrier of size {size} exceeds the supported maximum")]
    CarrierTooLarge { size: usize },
    #[error("relation is not reflexive at `{name}`")]
    NotReflexive { name: String },
    #[error("relation is not transitive: `{a}` <= `{b}` <= `{c}`")]
    NotTransitive { a: String, b: String, c: String },
    #[error("relation is not antisymmetric: `{a}` and `{b}` are equivalent but distinct")]
    AntisymmetryViolation { a: String, b: String },
    #[error("product of an empty family of spaces")]
    EmptyProduct,
    #[error("construction would materialize more than {cap} open sets")]
    TopologyTooLarge { cap: usize },
}

/// A well-formed input violating an operation's precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("operation requires a T0 space; points `{a}` and `{b}` share a closure")]
    NotT0 { a: String, b: String },
    #[error("subset {set} is not open in the space")]
    NotOpen { set: String },
    #[error("subset {set} is not closed in the space")]
    NotClosed { set: String },
    #[error("map is not continuous; witness open {witness}")]
    NotContinuous { witness: String },
    #[error("map does not preserve existing irreducible suprema; witness {witness}")]
    NotSupPreserving { witness: String },
    #[error("map is not injective: `{a}` and `{b}` collide")]
    NotInjective { a: String, b: String },
    #[error("map is not total or maps outside the target carrier")]
    NotTotal,
    #[error("target space is not k-bounded sober; witness {witness}")]
    TargetNotKBoundedSober { witness: String },
    #[error("source space is not qk-bounded sober; witness {witness}")]
    SourceNotQkBoundedSober { witness: String },
    #[error("element invalid for the ambient poset: {element}")]
    InvalidElement { element: String },
    #[error("descriptor is empty where a nonempty set is required")]
    EmptyDescriptor,
    #[error("{what} is unsupported for this symbolic space: {detail}")]
    Unsupported { what: String, detail: String },
}

/// An internal consistency check failed: a fact the underlying theory
/// guarantees did not verify. Always a bug in this library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("internal verification failed: {detail}")]
pub struct LibraryBug {
    pub detail: String,
}

pub(crate) fn bug(detail: impl Into<String>) -> LibraryBug {
    LibraryBug {
        detail: detail.into(),
    }
}
