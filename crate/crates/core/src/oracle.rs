//! Brute-force ground truth: `vec(Σⱼ AⱼXBⱼ) = (Σⱼ Bⱼᵀ ⊗ Aⱼ) vec(X)` with
//! column-stacking `vec`.

use crate::error::{LmeError, Result};
use crate::lme::{AffineSolutionSet, EquationSpec};
use crate::matcore::linalg::{pseudo_inverse, svd};
use crate::matcore::{Complex, ComplexMatrix};

#[derive(Debug, Clone)]
pub struct VectorizedSystem {
    /// `n² x n²`
    pub operator: ComplexMatrix,
    pub rhs_vec: Vec<Complex>,
    pub n: usize,
    /// `Σⱼ ‖Aⱼ‖_F ‖Bⱼ‖_F`, an upper bound for `‖operator‖₂`.
    pub scale: f64,
}

impl VectorizedSystem {
    /// `‖operator · vec(X) − vec(C)‖₂`.
    pub fn residual(&self, x: &ComplexMatrix) -> f64 {
        let applied = self.apply(x);
        applied
            .iter()
            .zip(&self.rhs_vec)
            .map(|(p, q)| (p - q).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖operator · vec(X)‖₂`.
    pub fn homogeneous_residual(&self, x: &ComplexMatrix) -> f64 {
        self.apply(x).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn apply(&self, x: &ComplexMatrix) -> Vec<Complex> {
        let v = ComplexMatrix::from_vec_columns(self.n * self.n, 1, &x.vec_columns())
            .expect("n x n candidate");
        (&self.operator * &v).column(0)
    }

    pub fn rhs_norm(&self) -> f64 {
        self.rhs_vec.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

pub fn vectorize(spec: &EquationSpec) -> VectorizedSystem {
    let n = spec.n();
    let operator = spec
        .a_list()
        .iter()
        .zip(spec.b_list())
        .fold(ComplexMatrix::zeros(n * n, n * n), |acc, (a, b)| {
            acc + b.transpose().kron(a)
        });
    VectorizedSystem {
        operator,
        rhs_vec: spec.rhs().vec_columns(),
        n,
        scale: spec.term_scale(),
    }
}

#[derive(Debug, Clone)]
pub struct OracleSolution {
    pub consistent: bool,
    /// `n² − rank(operator)`.
    pub dimension: usize,
    pub rank: usize,
    /// `‖operator · x⁺ − vec(C)‖₂` for the minimum-norm least-squares `x⁺`.
    pub residual: f64,
    pub min_norm_solution: Option<ComplexMatrix>,
    /// Orthonormal nullspace basis, reshaped to `n x n`.
    pub nullspace: Vec<ComplexMatrix>,
}

/// Singular values at most `tol_rank · σ_max` are dropped; an operator whose
/// terms cancel to `σ_max ≤ tol_rank · scale` is treated as zero. Consistency
/// means the least-squares residual is at most `√tol_rank · max(1, ‖vec(C)‖₂)`.
pub fn oracle_solve(system: &VectorizedSystem, tol_rank: f64) -> OracleSolution {
    let n = system.n;
    let dim = n * n;
    let decomposition = svd(&system.operator);
    let sigma_max = decomposition.sigma.first().copied().unwrap_or(0.0);
    let cancelled = sigma_max <= tol_rank * system.scale;
    let rank = if cancelled { 0 } else { decomposition.rank(tol_rank) };
    let pinv = if cancelled {
        ComplexMatrix::zeros(dim, dim)
    } else {
        pseudo_inverse(&system.operator, tol_rank)
    };
    let rhs = ComplexMatrix::from_vec_columns(dim, 1, &system.rhs_vec).expect("n² entries");
    let x = &pinv * &rhs;
    let candidate = ComplexMatrix::from_vec_columns(n, n, &x.column(0)).expect("n² entries");
    let residual = system.residual(&candidate);
    let consistent = residual <= tol_rank.sqrt() * system.rhs_norm().max(1.0);
    let nullspace = (rank..dim)
        .map(|k| {
            let v: Vec<Complex> = decomposition.v_t.row(k).iter().map(|z| z.conj()).collect();
            ComplexMatrix::from_vec_columns(n, n, &v).expect("n² entries")
        })
        .collect();
    OracleSolution {
        consistent,
        dimension: dim - rank,
        rank,
        residual,
        min_norm_solution: consistent.then_some(candidate),
        nullspace,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub consistent: bool,
    pub dimension: usize,
    /// Largest `‖operator · vec(E)‖₂ / max(1, ‖E‖_F)` over the basis.
    pub basis_residual: f64,
    /// `‖operator · vec(X̂) − vec(C)‖₂`, when consistent.
    pub x_hat_residual: Option<f64>,
}

/// Cross-checks a structured solution against the oracle; any disagreement is
/// returned as [`LmeError::Mismatch`].
pub fn compare(
    result: &AffineSolutionSet,
    system: &VectorizedSystem,
    tol: f64,
    tol_rank: f64,
) -> Result<Comparison> {
    let oracle = oracle_solve(system, tol_rank);
    if oracle.consistent != result.consistent {
        return Err(LmeError::Mismatch(format!(
            "consistency: solver {}, oracle {}",
            result.consistent, oracle.consistent
        )));
    }
    if oracle.dimension != result.dimension {
        return Err(LmeError::Mismatch(format!(
            "dimension: solver {}, oracle {}",
            result.dimension, oracle.dimension
        )));
    }
    let mut basis_residual: f64 = 0.0;
    for (i, e) in result.basis.iter().enumerate() {
        let r = system.homogeneous_residual(e) / e.frobenius_norm().max(1.0);
        if !(r <= tol) {
            return Err(LmeError::Mismatch(format!(
                "basis matrix {i} is outside the oracle nullspace (residual {r:.3e})"
            )));
        }
        basis_residual = basis_residual.max(r);
    }
    let x_hat_residual = if result.consistent {
        let r = system.residual(&result.x_hat);
        if !(r <= tol * system.rhs_norm().max(1.0)) {
            return Err(LmeError::Mismatch(format!(
                "candidate solution does not satisfy the vectorized system (residual {r:.3e})"
            )));
        }
        Some(r)
    } else {
        None
    };
    Ok(Comparison {
        consistent: result.consistent,
        dimension: result.dimension,
        basis_residual,
        x_hat_residual,
    })
}
