//! Dense complex matrix kernel.

mod eig;
pub(crate) mod linalg;
mod matrix;
mod perm;

pub use eig::{eig_decompose, eigenvalues, lex_cmp, EigenDecomposition};
pub(crate) use eig::{cluster_values, eig_clustered};
pub use matrix::{c, Complex, ComplexMatrix};
pub use perm::{
    direct_sum, direct_sum_permutation, permutation_matrix, permute_vector, Permutation,
};

use crate::error::{LmeError, Result};

/// `‖AB − BA‖_F ≤ tol · max(1, ‖A‖_F ‖B‖_F)`.
pub fn commutes(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<bool> {
    let n = a.order()?;
    if b.order()? != n {
        return Err(LmeError::DimensionMismatch(format!(
            "{n}x{n} against {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    let commutator = &(a * b) - &(b * a);
    let scale = (a.frobenius_norm() * b.frobenius_norm()).max(1.0);
    Ok(commutator.frobenius_norm() <= tol * scale)
}

/// `‖MM⋆ − M⋆M‖_F ≤ tol · max(1, ‖M‖_F²)`.
pub fn is_normal(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    m.order()?;
    let adj = m.adjoint();
    let gap = &(m * &adj) - &(&adj * m);
    let scale = m.frobenius_norm().powi(2).max(1.0);
    Ok(gap.frobenius_norm() <= tol * scale)
}

/// `‖M − M⋆‖_F ≤ tol · max(1, ‖M‖_F)`.
pub fn is_hermitian(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    m.order()?;
    Ok(m.distance(&m.adjoint()) <= tol * m.frobenius_norm().max(1.0))
}
