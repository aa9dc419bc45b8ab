//! Exact-arithmetic engine for invariant complex geometry on solvmanifold
//! models: character-weighted exterior algebra over the Gaussian
//! rationals, Dolbeault / Bott-Chern / Aeppli / de Rham cohomology, Hodge
//! theory for a diagonal metric, triple products with machine-checkable
//! non-vanishing certificates, and metric obstruction scans.
//!
//! All verdicts are yes/no facts about finite invariant complexes and are
//! computed exactly; there is no floating point anywhere.

pub mod character;
pub mod cohomology;
pub mod element;
pub mod error;
pub mod expr;
pub mod families;
pub mod hodge;
pub mod io;
pub mod linalg;
pub mod massey;
pub mod model;
pub mod monomial;
pub mod obstructions;
pub mod scalar;

pub use character::{Character, CharacterSet};
pub use element::{Element, TermKey};
pub use model::{DiffKind, ManifoldModel};
pub use monomial::FormMonomial;
pub use scalar::{Rational, Scalar};
