//! Free-algebra machinery: words, noncommutative polynomials, presentations
//! and their text format, linear changes of generators, relation-span
//! comparisons, graded twists, and the graded-module splitting check.

pub mod linalg;
mod change;
mod ncpoly;
mod parse;
mod presentation;
mod span;
mod splitting;
mod word;

pub use change::{substitute, zhang_twist, GradedAutomorphism, LinearChange};
pub use ncpoly::NCPoly;
pub use parse::{parse_presentation, parse_scalar};
pub use presentation::Presentation;
pub use span::{is_isomorphism_witness, span_equal};
pub use splitting::{verify_module_splitting, SplittingReport};
pub use word::{all_words, words_avoiding, Word};

use alloc::string::String;
use core::fmt;

/// Errors from parsing, presentation construction, and the linear-algebraic
/// operations on presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NcError {
    /// Malformed input text; positions are 1-based.
    Syntax { line: usize, col: usize, message: String },
    /// A relation uses a name that was not declared.
    UnknownGenerator { name: String, line: usize, col: usize },
    /// A relation mixes degrees.
    InhomogeneousRelation { index: usize },
    ZeroRelation { index: usize },
    DuplicateGenerator { name: String },
    InvalidDegree,
    /// Generator counts or vector dimensions do not match.
    DimensionMismatch,
    /// The twist is only implemented for quadratic relations.
    NonQuadratic,
    /// Span comparison requires homogeneous inputs of the stated degree.
    InhomogeneousInput,
    /// A linear change or automorphism matrix is singular.
    NotInvertible,
    /// The matrix does not preserve the relation span.
    SpanNotPreserved,
}

impl fmt::Display for NcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NcError::Syntax { line, col, message } => {
                write!(f, "syntax error at {}:{}: {}", line, col, message)
            }
            NcError::UnknownGenerator { name, line, col } => {
                write!(f, "unknown generator `{}` at {}:{}", name, line, col)
            }
            NcError::InhomogeneousRelation { index } => {
                write!(f, "relation {} is not homogeneous", index)
            }
            NcError::ZeroRelation { index } => write!(f, "relation {} is zero", index),
            NcError::DuplicateGenerator { name } => {
                write!(f, "generator `{}` declared twice", name)
            }
            NcError::InvalidDegree => write!(f, "generator and relation degrees must be positive"),
            NcError::DimensionMismatch => write!(f, "dimension mismatch"),
            NcError::NonQuadratic => write!(f, "only quadratic relations are supported here"),
            NcError::InhomogeneousInput => write!(f, "inputs must be homogeneous of the stated degree"),
            NcError::NotInvertible => write!(f, "matrix is not invertible"),
            NcError::SpanNotPreserved => write!(f, "map does not preserve the relation span"),
        }
    }
}

impl core::error::Error for NcError {}
