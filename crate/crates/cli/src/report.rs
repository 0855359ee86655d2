use std::collections::BTreeMap;

use lme_core::lme::{AffineSolutionSet, ConsistencyEvidence, EquationSpec, EquivalenceChecks};
use lme_core::oracle::OracleSolution;
use serde::Serialize;

use crate::format::MatrixPayload;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NamedChecks {
    pub equation_consistent: bool,
    pub relevant_condition: bool,
    pub x_hat_solves_equation: bool,
    pub standard_consistent: bool,
    pub x_hat_solves_standard: bool,
}

impl From<EquivalenceChecks> for NamedChecks {
    fn from(c: EquivalenceChecks) -> Self {
        NamedChecks {
            equation_consistent: c.equation_consistent,
            relevant_condition: c.relevant_condition,
            x_hat_solves_equation: c.x_hat_solves_equation,
            standard_consistent: c.standard_consistent,
            x_hat_solves_standard: c.x_hat_solves_standard,
        }
    }
}

/// Result of a solve. `x_hat` and `basis` are empty when there is no solution;
/// `equivalence_checks` is null for oracle answers.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub consistent: bool,
    pub dimension: usize,
    pub x_hat: Option<MatrixPayload>,
    pub basis: Vec<MatrixPayload>,
    pub residuals: BTreeMap<String, f64>,
    pub diagnostics: Vec<String>,
    pub equivalence_checks: Option<NamedChecks>,
}

impl SolveReport {
    pub fn from_solution(spec: &EquationSpec, set: &AffineSolutionSet, evidence: &ConsistencyEvidence) -> Self {
        let mut residuals = BTreeMap::new();
        residuals.insert("equation".to_string(), evidence.equation_residual);
        residuals.insert("standard".to_string(), evidence.standard_residual);
        residuals.insert("standard_projection".to_string(), evidence.standard_projection_residual);
        residuals.insert("oracle".to_string(), evidence.oracle_residual);

        let mut diagnostics = evidence.diagnostics.clone();
        let (x_hat, basis) = if set.consistent {
            let homogeneous = set
                .basis
                .iter()
                .map(|e| (spec.apply(e)).frobenius_norm() / e.frobenius_norm().max(1.0))
                .fold(0.0, f64::max);
            residuals.insert("basis".to_string(), homogeneous);
            (
                Some(MatrixPayload::from_matrix(&set.x_hat)),
                set.basis.iter().map(MatrixPayload::from_matrix).collect(),
            )
        } else {
            if let Some(r) = set.witness_r {
                diagnostics.push(format!(
                    "inconsistent: relevant matrix has a zero diagonal entry at row {} where the induced right-hand side is nonzero",
                    r + 1
                ));
            }
            diagnostics.push(format!(
                "the homogeneous equation has a solution space of dimension {}",
                set.dimension
            ));
            (None, Vec::new())
        };
        if set.normal_certificate == Some(true) {
            diagnostics.push("all parameters are normal and every solution is normal".into());
        }
        SolveReport {
            consistent: set.consistent,
            dimension: if set.consistent { set.dimension } else { 0 },
            x_hat,
            basis,
            residuals,
            diagnostics,
            equivalence_checks: Some(evidence.checks.into()),
        }
    }

    pub fn from_oracle(oracle: &OracleSolution, warning: String) -> Self {
        let mut residuals = BTreeMap::new();
        residuals.insert("oracle".to_string(), oracle.residual);
        let consistent = oracle.consistent;
        SolveReport {
            consistent,
            dimension: if consistent { oracle.dimension } else { 0 },
            x_hat: oracle.min_norm_solution.as_ref().map(MatrixPayload::from_matrix),
            basis: if consistent {
                oracle.nullspace.iter().map(MatrixPayload::from_matrix).collect()
            } else {
                Vec::new()
            },
            residuals,
            diagnostics: vec![warning],
            equivalence_checks: None,
        }
    }

    pub fn summary(&self) -> String {
        if self.consistent {
            format!("consistent; solution set has dimension {}", self.dimension)
        } else {
            "inconsistent; no solution".to_string()
        }
    }
}

/// Result of `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub trials: usize,
    pub agreements: usize,
    pub mismatches: Vec<String>,
    pub skipped: Vec<String>,
    pub max_basis_residual: f64,
    pub max_x_hat_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockReport {
    pub start: usize,
    pub len: usize,
    pub parent: Option<usize>,
    pub value: [f64; 2],
}

/// Result of `diagonalize`.
#[derive(Debug, Clone, Serialize)]
pub struct DiagonalizeReport {
    pub diagonalizer: MatrixPayload,
    pub induced_vectors: Vec<Vec<[f64; 2]>>,
    pub block_tree: Vec<Vec<BlockReport>>,
    pub pair: Option<PairReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub a: Vec<[f64; 2]>,
    pub b: Vec<[f64; 2]>,
    pub excluded: Vec<[f64; 2]>,
    pub beta: [f64; 2],
}
