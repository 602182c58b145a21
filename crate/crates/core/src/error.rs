use alloc::string::String;

/// Errors raised by group construction, lattice enumeration and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group closure exceeds the element limit of {limit}")]
    SizeLimitExceeded { limit: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("element or subgroup does not lie in the ambient group")]
    NotInAmbient,
    #[error("subgroups have different ambient groups")]
    AmbientMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("group of order {order} is not a p-group")]
    NotAPGroup { order: usize },
    #[error("subgroup lattice of a group of order {order} exceeds the bound {bound}")]
    LatticeTooLarge { order: usize, bound: usize },
    #[error("acting group does not normalize the target subgroup")]
    DoesNotNormalize,
    #[error("subgroup is not contained in the Sylow subgroup P")]
    NotInP,
    #[error("subgroup is not normal in the Sylow subgroup P")]
    NotNormalInP,
    #[error("family member is not an abelian subgroup of P")]
    FamilyNotAbelian,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("property failure: {0}")]
    PropertyFailure(&'static str),
    #[error("methods disagree on {check}: {detail}")]
    MethodDisagreement { check: &'static str, detail: String },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
