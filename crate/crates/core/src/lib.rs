//! Exact computation in Thompson's semigroup and other unique factorization
//! semigroups: normal forms, divisibility, lower-stable orders, finitely
//! supported convolution algebras and Følner-ratio experiments.

pub mod convolution;
pub mod error;
pub mod folner;
pub mod free;
pub mod norm;
pub mod semigroup;
pub mod thompson;
pub mod tsemigroup;

pub use convolution::{Coefficient, CompressedMatrix, SemigroupVector, TruncationBasis};
pub use error::{Error, Result};
pub use folner::{FiniteSubset, FolnerReport, FolnerRow};
pub use free::{FreeWord, UfBasis};
pub use semigroup::{LowerStable, Semigroup, Side};
pub use thompson::{GeneratorWord, ThompsonElement};
pub use tsemigroup::{IntMatrix2, TElement, TGenerator};
