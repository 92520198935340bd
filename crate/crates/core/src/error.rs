use thiserror::Error;

use crate::nakayama::{AlgebraId, Indecomposable, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra {algebra}: {reason}")]
    InvalidAlgebra {
        algebra: AlgebraId,
        reason: &'static str,
    },

    #[error("{module} is not an indecomposable module of {algebra}")]
    InvalidModule {
        algebra: AlgebraId,
        module: Indecomposable,
    },

    #[error("{module} is not tau-rigid in {algebra}")]
    NotTauRigid {
        algebra: AlgebraId,
        module: Indecomposable,
    },

    /// The tau-perpendicular category is not a direct sum of the supported
    /// module categories (or the algebra is outside the counting families).
    #[error("unsupported family: {algebra}{}", .module.map(|m| format!(" at {m}")).unwrap_or_default())]
    UnsupportedFamily {
        algebra: AlgebraId,
        module: Option<Indecomposable>,
    },

    #[error("lattice coordinates are only defined for cyclic algebras, got {0}")]
    NotCyclic(AlgebraId),

    #[error("lattice point {point} lies outside the AR quiver of {algebra}")]
    LatticeOutOfRange {
        algebra: AlgebraId,
        point: LatticePoint,
    },

    #[error("series inverse requires a nonzero constant term")]
    ZeroConstantTerm,

    #[error("series exponential requires a zero constant term")]
    NonZeroConstantTerm,

    #[error("closed formula did not evaluate to an integer: {0}")]
    NonIntegerResult(String),
}

pub type Result<T> = std::result::Result<T, Error>;
