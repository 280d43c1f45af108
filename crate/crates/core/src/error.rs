use thiserror::Error;

use crate::group::Elem;

/// Errors raised by the workbench. Variants map onto the CLI exit-code contract
/// through [`Error::is_precondition`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u32> },
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("residue {residue} out of range for characteristic {p}")]
    BadResidue { residue: u32, p: u32 },
    #[error("field mismatch")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("multiplication table is not square")]
    NotSquare,
    #[error("multiplication table entry {0} out of range")]
    EntryOutOfRange(u32),
    #[error("multiplication table is not a Latin square (row or column {0} repeats)")]
    NotLatin(usize),
    #[error("multiplication table has no identity")]
    NoIdentity,
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element index {0} out of range")]
    BadElement(u32),
    #[error("group order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("subgroups belong to different groups")]
    GroupMismatch,
    #[error("{0} is not a subgroup of the required group")]
    NotContained(String),
    #[error("subgroup {0} is not central")]
    NotCentral(String),
    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("generator images are inconsistent: {0}")]
    InconsistentImages(String),
    #[error("generator images do not generate the group")]
    NotGenerating,
    #[error("matrix for element {0:?} is not invertible")]
    NotInvertible(Elem),
    #[error("representation is not a homomorphism at ({0:?}, {1:?})")]
    NotHomomorphism(Elem, Elem),
    #[error("representations live on different groups or fields")]
    RepMismatch,
    #[error("map is not equivariant for element {0:?}")]
    NotEquivariant(Elem),
    #[error("vector is not fixed by the subgroup")]
    NotFixed,
    #[error("the zero vector is excluded")]
    ZeroVector,
    #[error("not a character: {0}")]
    NotCharacter(String),
    #[error("character is incompatible with the action on C ∩ K")]
    CharacterIncompatible,
    #[error("sequence is not short exact: {0}")]
    NotExact(String),
    #[error("vectors {0:?} have empty Ω and the remaining blocks do not cover V")]
    Uncovered(Vec<Vec<u32>>),
    #[error("index {index} is divisible by the characteristic {p}")]
    IndexDivisibleByP { index: usize, p: u32 },

    #[error("H' is not contained in H")]
    HprimeNotInH,
    #[error("central intersection Z(G) ∩ H is trivial")]
    TrivialCentralIntersection,
    #[error("depth must be at least 1")]
    BadDepth,
    #[error("precision insufficient: {0}")]
    Precision(String),

    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    /// True for violated numeric preconditions (precision, depth), which the CLI
    /// reports with exit code 3 rather than as malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::Precision(_) | Error::BadDepth | Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
