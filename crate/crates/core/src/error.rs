use std::fmt;

/// Which group axiom a candidate multiplication table violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// The table is not `order × order` or holds an index `>= order`.
    Shape(String),
    /// Row `row` repeats an entry.
    LatinRow { row: usize },
    /// Column `column` repeats an entry.
    LatinColumn { column: usize },
    /// No element acts as a two-sided identity.
    NoIdentity,
    /// `(a·b)·c != a·(b·c)`.
    Associativity { a: usize, b: usize, c: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Shape(msg) => write!(f, "malformed table: {msg}"),
            AxiomViolation::LatinRow { row } => write!(f, "row {row} is not a permutation"),
            AxiomViolation::LatinColumn { column } => {
                write!(f, "column {column} is not a permutation")
            }
            AxiomViolation::NoIdentity => write!(f, "no identity element"),
            AxiomViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails for the triple ({a}, {b}, {c})")
            }
        }
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(AxiomViolation),
    #[error("generated group exceeds the closure cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("generator {index} has determinant {det} mod {p}, expected 1")]
    NotUnimodular { index: usize, det: u64, p: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("commutator of an empty sequence")]
    EmptyInput,
    #[error("element index {index} out of range for a group of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not contained in the required overgroup")]
    NotContained,
    #[error("the subgroup belongs to a group of order {subgroup_parent}, not {order}")]
    ForeignSubgroup { subgroup_parent: usize, order: usize },
    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("integer overflow while counting tuples")]
    Overflow,
    #[error("naive enumeration needs {needed} tuple evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures caused by size caps, budgets or arithmetic limits
    /// rather than by malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ClosureTooLarge { .. }
                | Error::OrderCapExceeded { .. }
                | Error::Overflow
                | Error::BudgetExceeded { .. }
                | Error::SearchBudgetExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
