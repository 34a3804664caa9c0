use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutations act on different carriers (degree {0} vs {1})")]
    MixedCarriers(usize, usize),

    #[error("image table is not a bijection of 0..{0}")]
    NotABijection(usize),

    #[error("carrier of size {size} exceeds the brute-force bound of {bound}")]
    CarrierTooLarge { size: usize, bound: usize },

    #[error("group of order {order} exceeds the enumeration bound of {bound}")]
    GroupTooLarge { order: usize, bound: usize },

    #[error("group does not act simply transitively on its carrier")]
    NotSimplyTransitive,

    #[error("groups are not dual: simple transitivity or commutation fails")]
    NotDual,

    #[error("not a subgroup of the ambient group")]
    NotSubgroup,

    #[error("permutation is not an element of the group")]
    NotInGroup,

    #[error("permutation does not commute with {witness}")]
    DoesNotCommute { witness: String },

    #[error("permutation does not preserve the subset")]
    DoesNotPreserve,

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("set {0} is not closed under the monoid action")]
    NotClosed(String),

    #[error("affine map {0} is not a transposition or inversion")]
    NotTi(String),

    #[error("unknown point {0}")]
    UnknownPoint(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
