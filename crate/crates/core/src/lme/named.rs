use crate::error::{LmeError, Result};
use crate::matcore::{cluster_values, eigenvalues, is_hermitian, is_normal, c, Complex, ComplexMatrix};
use crate::oracle::{oracle_solve, vectorize};
use crate::tolerance::Tolerances;

use super::equation::EquationSpec;
use super::relevant::relevant_matrix;
use super::solve::{solve, AffineSolutionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedForm {
    /// `AX + XB = C`
    Sylvester,
    /// `AXB − X = C`
    Stein,
    /// `A⋆X + XA = C`
    ContinuousLyapunov,
    /// `A⋆XA − X = C`
    DiscreteLyapunov,
}

impl NamedForm {
    pub fn name(self) -> &'static str {
        match self {
            NamedForm::Sylvester => "sylvester",
            NamedForm::Stein => "stein",
            NamedForm::ContinuousLyapunov => "clyap",
            NamedForm::DiscreteLyapunov => "dlyap",
        }
    }

    /// The pair condition counted by the dimension formula.
    pub fn pair_condition(self) -> &'static str {
        match self {
            NamedForm::Sylvester => "a_r + b_s = 0",
            NamedForm::Stein => "a_r b_s = 1",
            NamedForm::ContinuousLyapunov => "conj(a_r) + a_s = 0",
            NamedForm::DiscreteLyapunov => "conj(a_r) a_s = 1",
        }
    }

    pub fn needs_b(self) -> bool {
        matches!(self, NamedForm::Sylvester | NamedForm::Stein)
    }

    fn is_lyapunov(self) -> bool {
        !self.needs_b()
    }
}

#[derive(Debug, Clone)]
pub struct NamedSolution {
    pub form: NamedForm,
    /// Number of eigenvalue pairs meeting the form's pair condition.
    pub pair_count: usize,
    pub solution: AffineSolutionSet,
}

/// The general equation for a named form. For the Lyapunov forms `b` is ignored
/// and `A⋆` is formed here.
pub fn named_spec(
    form: NamedForm,
    a: &ComplexMatrix,
    b: Option<&ComplexMatrix>,
    rhs: &ComplexMatrix,
) -> Result<EquationSpec> {
    let n = a.order()?;
    let i = ComplexMatrix::identity(n);
    let neg_i = -&i;
    let other = || -> Result<ComplexMatrix> {
        b.cloned()
            .ok_or_else(|| LmeError::DimensionMismatch(format!("{} needs a B matrix", form.name())))
    };
    let (a_list, b_list) = match form {
        NamedForm::Sylvester => (vec![a.clone(), i.clone()], vec![i, other()?]),
        NamedForm::Stein => (vec![a.clone(), neg_i], vec![other()?, i]),
        NamedForm::ContinuousLyapunov => (vec![a.adjoint(), i.clone()], vec![i, a.clone()]),
        NamedForm::DiscreteLyapunov => (vec![a.adjoint(), neg_i], vec![a.clone(), i]),
    };
    EquationSpec::new(a_list, b_list, rhs.clone())
}

/// Eigenvalues with numerically equal values snapped to their cluster mean.
fn snapped_eigenvalues(m: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<Complex>> {
    let values = eigenvalues(m)?;
    let gap = tol.cluster * m.frobenius_norm().max(1.0);
    let mut out = vec![c(0.0, 0.0); values.len()];
    for cl in cluster_values(&values, gap) {
        for &i in &cl.members {
            out[i] = cl.value;
        }
    }
    Ok(out)
}

/// Counts `(r, s)` meeting the pair condition over the eigenvalues of `A`
/// (and `B`). The count does not depend on how the eigenvalues are ordered,
/// and it is evaluated even when the hypotheses of the solver fail.
pub fn pair_count(
    form: NamedForm,
    a: &ComplexMatrix,
    b: Option<&ComplexMatrix>,
    tol: &Tolerances,
) -> Result<usize> {
    let av = snapped_eigenvalues(a, tol)?;
    let n = av.len();
    let bv = match (form.needs_b(), b) {
        (true, Some(b)) => snapped_eigenvalues(b, tol)?,
        (true, None) => {
            return Err(LmeError::DimensionMismatch(format!("{} needs a B matrix", form.name())))
        }
        (false, _) => av.clone(),
    };
    if bv.len() != n {
        return Err(LmeError::DimensionMismatch(format!("A is {n}x{n}, B is {0}x{0}", bv.len())));
    }
    let conj: Vec<Complex> = av.iter().map(|z| z.conj()).collect();
    let ones = vec![c(1.0, 0.0); n];
    let minus = vec![c(-1.0, 0.0); n];
    let (a_vecs, b_vecs) = match form {
        NamedForm::Sylvester => (vec![av, ones.clone()], vec![ones, bv]),
        NamedForm::Stein => (vec![av, minus], vec![bv, ones]),
        NamedForm::ContinuousLyapunov => (vec![conj, ones.clone()], vec![ones, bv]),
        NamedForm::DiscreteLyapunov => (vec![conj, minus], vec![bv, ones]),
    };
    Ok(relevant_matrix(&a_vecs, &b_vecs, &vec![c(0.0, 0.0); n], tol.zero)?.zero_count)
}

/// Pair-count formula next to the oracle's answer, for inputs that may violate
/// the hypotheses.
#[derive(Debug, Clone)]
pub struct NamedFormDiagnostics {
    pub form: NamedForm,
    pub pair_count: usize,
    pub oracle_consistent: bool,
    pub oracle_dimension: usize,
    /// Why the structured solver refuses this input, if it does.
    pub hypothesis: Option<LmeError>,
}

pub fn named_form_diagnostics(
    form: NamedForm,
    a: &ComplexMatrix,
    b: Option<&ComplexMatrix>,
    rhs: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<NamedFormDiagnostics> {
    let spec = named_spec(form, a, b, rhs)?;
    let oracle = oracle_solve(&vectorize(&spec), tol.rank);
    let hypothesis = match solve_named(form, a, b, rhs, tol) {
        Ok(_) => None,
        Err(e @ (LmeError::HypothesisViolated(_) | LmeError::NotNormal | LmeError::NotHermitianRhs)) => Some(e),
        Err(e) => return Err(e),
    };
    Ok(NamedFormDiagnostics {
        form,
        pair_count: pair_count(form, a, b, tol)?,
        oracle_consistent: oracle.consistent,
        oracle_dimension: oracle.dimension,
        hypothesis,
    })
}

pub fn solve_named(
    form: NamedForm,
    a: &ComplexMatrix,
    b: Option<&ComplexMatrix>,
    rhs: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<NamedSolution> {
    if form.is_lyapunov() {
        if !is_normal(a, tol.commute)? {
            return Err(LmeError::NotNormal);
        }
        if !is_hermitian(rhs, tol.res)? {
            return Err(LmeError::NotHermitianRhs);
        }
    }
    let spec = named_spec(form, a, b, rhs)?;
    let solution = solve(&spec, tol)?;
    Ok(NamedSolution {
        form,
        pair_count: pair_count(form, a, b, tol)?,
        solution,
    })
}

pub fn solve_sylvester(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rhs: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<NamedSolution> {
    solve_named(NamedForm::Sylvester, a, Some(b), rhs, tol)
}

pub fn solve_stein(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    rhs: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<NamedSolution> {
    solve_named(NamedForm::Stein, a, Some(b), rhs, tol)
}

pub fn solve_continuous_lyapunov(
    a: &ComplexMatrix,
    rhs: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<NamedSolution> {
    solve_named(NamedForm::ContinuousLyapunov, a, None, rhs, tol)
}

pub fn solve_discrete_lyapunov(
    a: &ComplexMatrix,
    rhs: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<NamedSolution> {
    solve_named(NamedForm::DiscreteLyapunov, a, None, rhs, tol)
}
