//! Error types, one enum per layer.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands belong to models with different character arities ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },
}

/// Rejection reasons of `ManifoldModel` loading. Loading is total: a model
/// that fails any invariant is rejected as a whole.
#[derive(Error, Debug)]
pub enum ModelError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coframe element {label} is not integrable: d has a (0,2) component {component}")]
    NotIntegrable { label: String, component: String },
    #[error("d² ≠ 0 on {on}: d(d{on}) = {value}")]
    NotClosedSquare { on: String, value: String },
    #[error("log-derivative of basis character {label} is not d-closed: d(dlog) = {value}")]
    DlogNotClosed { label: String, value: String },
    #[error(
        "model fails the Stokes check (unimodularity surrogate): \
         d of the degree-{degree} monomial {monomial} has volume coefficient {coeff}"
    )]
    NotUnimodular {
        degree: usize,
        monomial: String,
        coeff: String,
    },
    #[error("structure equation for {label} has a non-constant coefficient (character {character})")]
    NonInvariantStructure { label: String, character: String },
    #[error("log-derivative of basis character {label} must be a constant-coefficient 1-form")]
    MalformedDlog { label: String },
    #[error("metric entry {index} is not positive")]
    NonPositiveMetric { index: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Error, Debug)]
pub enum CohomologyError {
    #[error("inconsistent bidegrees: target has bidegree {target:?} unreachable from the span")]
    InconsistentBidegrees { target: Vec<(usize, usize)> },
    #[error("character set must contain the trivial character and be closed under inversion")]
    BadCharacterSet,
}

#[derive(Error, Debug)]
pub enum HodgeError {
    #[error("harmonicity is only defined for bidegree-homogeneous forms; got bidegrees {0:?}")]
    NotHomogeneous(Vec<(usize, usize)>),
}

#[derive(Error, Debug)]
pub enum MasseyError {
    #[error("input a{which} is not a Bott-Chern cocycle: {reason}")]
    NotBcCocycle { which: u8, reason: String },
    #[error("input a{which} is zero")]
    ZeroInput { which: u8 },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

#[derive(Error, Debug)]
pub enum PairingError {
    #[error("representative is zero; nothing to certify")]
    ZeroRepresentative,
    #[error("certificate only applies to non-vanishing verdicts (got {0})")]
    NotNonVanishing(String),
    #[error("pairing pattern inapplicable: {0} (membership certificate remains authoritative)")]
    PatternInapplicable(String),
}

#[derive(Error, Debug)]
pub enum ObstructionError {
    #[error("pool element {index} is not a (1,0)-form")]
    PoolNotOneZero { index: usize },
    #[error("pool element {index} mixes characters")]
    PoolMixedCharacter { index: usize },
}

/// Why a certificate failed re-verification.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("beta is zero")]
    ZeroBeta,
    #[error("beta is not decomposable")]
    NotDecomposable,
    #[error("beta is not a (2,0)-form")]
    BetaNotTwoZero,
    #[error("beta mixes characters")]
    BetaMixedCharacter,
    #[error("beta ∧ conj(beta) has a nontrivial character")]
    NontrivialPairing,
    #[error("scale must be a nonzero real rational")]
    BadScale,
    #[error("equation fails: ∂∂̄(eta) ≠ scale · beta ∧ conj(beta)")]
    EquationFails,
    #[error("witness does not reproduce the target")]
    WitnessMismatch,
    #[error("dual functional does not annihilate the span")]
    DualNotAnnihilating,
    #[error("dual functional vanishes on the target")]
    DualVanishesOnTarget,
    #[error("certificate malformed: {0}")]
    Malformed(String),
}
