//! Finitely presented graded *-algebras: words, directed rewrite rules,
//! normal forms and the elements built on them.

mod builtin;
mod confluence;
mod element;
mod presentation;
mod word;

use thiserror::Error;

use crate::scalars::ScalarError;

pub use builtin::{free_presentation, suq2_presentation, torus_presentation, uq2_presentation};
pub use confluence::{confluence_check, ConfluenceReport, Divergence};
pub use element::{Degree, Element};
pub use presentation::{Generator, PresKey, Presentation, PresentationBuilder, RewriteRule, TwistTable};
pub use word::{Gen, Word};

pub(crate) use presentation::Atom;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("presentation-mismatch: {0} vs {1}")]
    PresentationMismatch(String, String),
    #[error("non-terminating: rewriting in {0} exceeded the depth limit")]
    NonTerminating(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("invalid leg {0}")]
    InvalidLeg(usize),
    #[error("non-invertible parameter")]
    NonInvertibleParameter,
    #[error("non-unimodular twist {0}")]
    NonUnimodular(String),
    #[error("unverified-morphism: {0}")]
    UnverifiedMorphism(String),
    #[error("not-T-invariant: {0}")]
    NotTInvariant(String),
    #[error("not-equivariant: {0}")]
    NotEquivariant(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
