use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Every variant carries the witness that triggered it, so validation
/// failures name the broken invariant instead of just pointing at it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("target {value} out of range for a codomain of size {cod}")]
    TargetRange { value: usize, cod: usize },

    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },

    #[error("relation is not reflexive: missing ({i}, {i})")]
    NotReflexive { i: usize },

    #[error("relation is not transitive: has ({i}, {j}) and ({j}, {k}) but not ({i}, {k})")]
    NotTransitive { i: usize, j: usize, k: usize },

    #[error("map is not monotone: ({i}, {j}) is in the domain order but ({fi}, {fj}) is not in the codomain order")]
    NotMonotone {
        i: usize,
        j: usize,
        fi: usize,
        fj: usize,
    },

    #[error("subset {subset} is not clopen in the domain")]
    NotClopen { subset: String },

    #[error("objects do not match: {context}")]
    ObjectMismatch { context: String },

    #[error("{blocks} clopen blocks exceed the enumeration cap of {cap}; iterate over clopen_components instead")]
    ClopenCap { blocks: usize, cap: usize },

    #[error("exhaustive enumeration is limited to carriers of size at most {max}, got {n}")]
    EnumerationLimit { n: usize, max: usize },

    #[error("carrier size {n} exceeds the supported maximum of {max}")]
    CarrierLimit { n: usize, max: usize },

    #[error("unknown suite {name:?}")]
    UnknownSuite { name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
