use core::fmt;

use crate::lambda::LambdaElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `mu(n) > q`: no spike of degree `n` in `q` variables.
    NoSpike { q: usize, n: u32 },
    VariableCount { found: usize },
    DegreeMismatch { expected: u32, found: u32 },
    NotPermutation,
    SingularMatrix,
    /// A computation would need more columns than the configured cap.
    ResourceCap { needed: usize, cap: usize },
    /// A chain expected to be a cycle has this nonzero boundary.
    NotACycle { boundary: LambdaElement },
    /// A weight-filtered reduction left terms of larger weight.
    WeightLeak,
    ReductionCap,
    Invalid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoSpike { q, n } => write!(f, "no spike of degree {n} in {q} variables (mu(n) > q)"),
            Self::VariableCount { found } => write!(f, "variable count {found} outside 1..=5"),
            Self::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Self::NotPermutation => f.write_str("column order is not a permutation"),
            Self::SingularMatrix => f.write_str("matrix is singular"),
            Self::ResourceCap { needed, cap } => {
                write!(f, "needs {needed} columns, cap is {cap}")
            }
            Self::NotACycle { boundary } => write!(f, "not a cycle: d = {boundary}"),
            Self::WeightLeak => f.write_str("reduction left terms above the weight"),
            Self::ReductionCap => f.write_str("lambda reduction exceeded its iteration cap"),
            Self::Invalid(what) => f.write_str(what),
        }
    }
}

impl core::error::Error for Error {}
