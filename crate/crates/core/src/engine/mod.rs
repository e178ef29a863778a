//! Exact linear algebra over a prime field for homogeneous ideals up to a
//! degree cap: Hilbert functions, colon and restriction by linear forms,
//! truncation-generated subideals, saturation checks, catalecticant ranks,
//! and a Koszul-homology Betti oracle.

use thiserror::Error;

use crate::lex::LexError;
use crate::macaulay::MacaulayError;

pub mod apolar;
pub mod field;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod poly;

pub use apolar::apolar_hf;
pub use field::{PrimeField, DEFAULT_PRIME};
pub use ideal::{
    build_ideal, build_ideal_with, gotzmann_predict, is_saturated_from, relate_input, restriction_profile,
    saturation_index, scheme_profile, GradedIdealModel, RestrictionProfile,
};
pub use koszul::koszul_betti;
pub use linalg::Subspace;
pub use poly::{PolyTerm, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} must be below 2^32")]
    PrimeTooLarge(u64),
    #[error("at least one variable is required")]
    NoVariables,
    #[error("polynomial {index}: exponent vector has length {found}, expected {expected}")]
    ArityMismatch { index: usize, expected: usize, found: usize },
    #[error("polynomial {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("polynomial {index} has degree {degree} above the cap {cap}")]
    AboveCap { index: usize, degree: usize, cap: usize },
    #[error("the form is zero")]
    ZeroForm,
    #[error("the linear form lies in [I]_1")]
    LinearFormInIdeal,
    #[error("no linear form outside [I]_1 was found")]
    NoAdmissibleLinearForm,
    #[error("degree cap {cap} is too small; need {needed}")]
    CapTooSmall { needed: usize, cap: usize },
    #[error("the quotient does not vanish at the cap {cap}")]
    NotArtinianWithinCap { cap: usize },
    #[error("characteristic {p} does not exceed the degree {degree}")]
    CharacteristicTooSmall { p: u64, degree: usize },
    #[error("additivity fails in degree {degree}: h = {h}, b = {b}, l = {l}")]
    AdditivityViolated { degree: usize, h: u64, b: u64, l: u64 },
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

pub type Result<T> = std::result::Result<T, EngineError>;
