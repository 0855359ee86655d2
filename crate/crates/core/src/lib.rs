//! Consistency and full solution sets of linear matrix equations
//! `Σⱼ AⱼXBⱼ = C` whose parameters form a commuting set of diagonalizable
//! complex matrices.

pub mod error;
pub mod geninv;
pub mod lme;
pub mod matcore;
pub mod oracle;
pub mod random;
pub mod simdiag;
pub mod tolerance;

pub use error::{LmeError, Result};
pub use matcore::{c, Complex, ComplexMatrix, Permutation};
pub use tolerance::Tolerances;
