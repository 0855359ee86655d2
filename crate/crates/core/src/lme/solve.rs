use crate::error::{LmeError, Result};
use crate::geninv::{drazin_with_tol, moore_penrose_with_tol, rank};
use crate::matcore::{commutes, is_normal, Complex, ComplexMatrix};
use crate::oracle::{oracle_solve, vectorize};
use crate::simdiag::{simultaneous_diagonalizer, validate_family, CommutingFamily};
use crate::tolerance::Tolerances;

use super::equation::EquationSpec;
use super::relevant::{relevant_matrix, RelevantMatrix};

/// The solution set `X̂ + span(basis)` when consistent.
#[derive(Debug, Clone)]
pub struct AffineSolutionSet {
    pub consistent: bool,
    /// First row `r` with `Γ_rr = 0` and `c_r ≠ 0`.
    pub witness_r: Option<usize>,
    pub x_hat: ComplexMatrix,
    /// `S E_rs S⁻¹` for every zero cell of `Γ`.
    pub basis: Vec<ComplexMatrix>,
    pub zero_cells: Vec<(usize, usize)>,
    pub dimension: usize,
    pub diagonalizer: ComplexMatrix,
    /// Set when every parameter is normal: true iff all off-diagonal `Γ` entries are nonzero.
    pub normal_certificate: Option<bool>,
    pub relevant: RelevantMatrix,
}

impl AffineSolutionSet {
    /// `X̂ + Σ coeffs[i] · basis[i]`.
    pub fn solution(&self, coeffs: &[Complex]) -> Result<ComplexMatrix> {
        if coeffs.len() != self.basis.len() {
            return Err(LmeError::DimensionMismatch(format!(
                "{} coefficients for a basis of {}",
                coeffs.len(),
                self.basis.len()
            )));
        }
        Ok(coeffs
            .iter()
            .zip(&self.basis)
            .fold(self.x_hat.clone(), |acc, (&w, e)| acc + e.scale(w)))
    }
}

/// `(Σⱼ AⱼBⱼ)ᴰ C`.
pub fn x_hat(spec: &EquationSpec) -> Result<ComplexMatrix> {
    x_hat_with_tol(spec, Tolerances::default().rank)
}

/// As [`x_hat`]; a sum `Σⱼ AⱼBⱼ` that cancels below `tol_rank · Σⱼ‖Aⱼ‖‖Bⱼ‖` counts as zero.
pub fn x_hat_with_tol(spec: &EquationSpec, tol_rank: f64) -> Result<ComplexMatrix> {
    Ok(&drazin_with_tol(&spec.standard_operator_at(tol_rank), tol_rank)? * spec.rhs())
}

pub(crate) fn validated_family(spec: &EquationSpec, tol: &Tolerances) -> Result<CommutingFamily> {
    validate_family(spec.parameters(), tol).map_err(LmeError::hypothesis)
}

pub fn solve(spec: &EquationSpec, tol: &Tolerances) -> Result<AffineSolutionSet> {
    let family = validated_family(spec, tol)?;
    solve_validated(spec, &family, tol)
}

fn solve_validated(
    spec: &EquationSpec,
    family: &CommutingFamily,
    tol: &Tolerances,
) -> Result<AffineSolutionSet> {
    let k = spec.k();
    let n = spec.n();
    let seq = simultaneous_diagonalizer(family)?;
    let relevant = relevant_matrix(
        &seq.vectors[..k],
        &seq.vectors[k..2 * k],
        &seq.vectors[2 * k],
        tol.zero,
    )?;
    let witness_r = relevant.consistency_witness(tol.zero);
    let s = seq.diagonalizer;
    let s_inv = s.inverse()?;
    let zero_cells = relevant.zero_cells();
    let basis: Vec<ComplexMatrix> = zero_cells
        .iter()
        .map(|&(r, q)| ComplexMatrix::outer(&s.column(r), &s_inv.row(q)))
        .collect();
    let mut all_normal = true;
    for m in family.members() {
        if !is_normal(m, tol.commute)? {
            all_normal = false;
            break;
        }
    }
    let normal_certificate = all_normal.then(|| relevant.off_diagonal_nonzero());
    let x_hat = x_hat_with_tol(spec, tol.rank)?;
    debug_assert_eq!(x_hat.rows(), n);
    Ok(AffineSolutionSet {
        consistent: witness_r.is_none(),
        witness_r,
        x_hat,
        dimension: basis.len(),
        basis,
        zero_cells,
        diagonalizer: s,
        normal_certificate,
        relevant,
    })
}

/// The five equivalent consistency conditions, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceChecks {
    /// The equation is consistent, decided by the Kronecker oracle.
    pub equation_consistent: bool,
    /// `Γ_rr ≠ 0` or `c_r = 0` for every `r`.
    pub relevant_condition: bool,
    pub x_hat_solves_equation: bool,
    pub standard_consistent: bool,
    pub x_hat_solves_standard: bool,
}

impl EquivalenceChecks {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.equation_consistent,
            self.relevant_condition,
            self.x_hat_solves_equation,
            self.standard_consistent,
            self.x_hat_solves_standard,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

#[derive(Debug, Clone)]
pub struct ConsistencyEvidence {
    pub checks: EquivalenceChecks,
    /// `‖Σ AⱼX̂Bⱼ − C‖_F`.
    pub equation_residual: f64,
    /// `‖(Σ AⱼBⱼ)X̂ − C‖_F`.
    pub standard_residual: f64,
    /// `‖(I − MM†)C‖_F` for `M = Σ AⱼBⱼ`.
    pub standard_projection_residual: f64,
    pub oracle_residual: f64,
    pub oracle_dimension: usize,
    pub witness_r: Option<usize>,
    pub diagnostics: Vec<String>,
}

/// Decides consistency through the relevant matrix and reports all five
/// equivalent facts. Disagreement is surfaced in `diagnostics`.
pub fn check_consistent(
    spec: &EquationSpec,
    tol: &Tolerances,
) -> Result<(bool, ConsistencyEvidence)> {
    let set = solve(spec, tol)?;
    Ok(consistency_evidence(spec, &set, tol))
}

pub(crate) fn residual_bound(spec: &EquationSpec, tol: &Tolerances) -> f64 {
    tol.res * spec.rhs().frobenius_norm().max(1.0)
}

/// The five checks for an already computed solution set.
pub fn consistency_evidence(
    spec: &EquationSpec,
    set: &AffineSolutionSet,
    tol: &Tolerances,
) -> (bool, ConsistencyEvidence) {
    let bound = residual_bound(spec, tol);
    let oracle = oracle_solve(&vectorize(spec), tol.rank);
    let m = spec.standard_operator_at(tol.rank);
    let m_pinv = moore_penrose_with_tol(&m, tol.rank).expect("finite by construction");
    let projection = spec.rhs() - &(&(&m * &m_pinv) * spec.rhs());
    let equation_residual = spec.residual(&set.x_hat);
    let standard_residual = (&m * &set.x_hat).distance(spec.rhs());
    let standard_projection_residual = projection.frobenius_norm();
    let checks = EquivalenceChecks {
        equation_consistent: oracle.consistent,
        relevant_condition: set.consistent,
        x_hat_solves_equation: equation_residual <= bound,
        standard_consistent: standard_projection_residual <= bound,
        x_hat_solves_standard: standard_residual <= bound,
    };
    let mut diagnostics = Vec::new();
    if !checks.all_agree() {
        diagnostics.push(format!(
            "equivalent consistency conditions disagree {:?}; residuals: equation {equation_residual:.3e}, standard {standard_residual:.3e}, projection {standard_projection_residual:.3e}, oracle {:.3e}; the instance is likely ill-conditioned",
            checks.as_array(),
            oracle.residual
        ));
    }
    if oracle.dimension != set.dimension {
        diagnostics.push(format!(
            "oracle dimension {} differs from relevant-matrix dimension {}",
            oracle.dimension, set.dimension
        ));
    }
    (
        set.consistent,
        ConsistencyEvidence {
            checks,
            equation_residual,
            standard_residual,
            standard_projection_residual,
            oracle_residual: oracle.residual,
            oracle_dimension: oracle.dimension,
            witness_r: set.witness_r,
            diagnostics,
        },
    )
}

/// Solves `(Σ AⱼBⱼ) X = C` under the hypotheses of the full equation.
pub fn solve_standard(spec: &EquationSpec, tol: &Tolerances) -> Result<AffineSolutionSet> {
    validated_family(spec, tol)?;
    solve(&spec.standard_equation(), tol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniquenessReport {
    pub unique: bool,
    pub infinite: bool,
    pub dimension: usize,
    pub standard_invertible: bool,
}

pub fn uniqueness_report(
    result: &AffineSolutionSet,
    spec: &EquationSpec,
    tol: &Tolerances,
) -> Result<UniquenessReport> {
    if !result.consistent {
        return Err(LmeError::InconsistentInput);
    }
    let standard_invertible = rank(&spec.standard_operator_at(tol.rank), tol.rank) == spec.n();
    Ok(UniquenessReport {
        unique: result.dimension == 0,
        infinite: result.dimension > 0,
        dimension: result.dimension,
        standard_invertible,
    })
}

/// How a candidate `X` relates to the equation and to its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutationCheck {
    pub residual: f64,
    pub is_solution: bool,
    pub differs_from_x_hat: bool,
    /// `‖AⱼX − XAⱼ‖_F` per term.
    pub a_commutators: Vec<f64>,
    pub b_commutators: Vec<f64>,
    pub commutes_with_all: bool,
}

pub fn commutation_check(
    spec: &EquationSpec,
    x: &ComplexMatrix,
    x_hat: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<CommutationCheck> {
    if x.rows() != spec.n() || x.cols() != spec.n() {
        return Err(LmeError::DimensionMismatch(format!(
            "candidate is {}x{}, equation order {}",
            x.rows(),
            x.cols(),
            spec.n()
        )));
    }
    let gap = |m: &ComplexMatrix| (&(m * x) - &(x * m)).frobenius_norm();
    let mut commutes_with_all = true;
    for m in spec.a_list().iter().chain(spec.b_list()) {
        commutes_with_all &= commutes(m, x, tol.commute)?;
    }
    let residual = spec.residual(x);
    Ok(CommutationCheck {
        residual,
        is_solution: residual <= residual_bound(spec, tol),
        differs_from_x_hat: x.distance(x_hat) > tol.res * x_hat.frobenius_norm().max(1.0),
        a_commutators: spec.a_list().iter().map(gap).collect(),
        b_commutators: spec.b_list().iter().map(gap).collect(),
        commutes_with_all,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::c;

    fn swap_equation() -> EquationSpec {
        let a = ComplexMatrix::from_real(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]);
        let b = ComplexMatrix::from_real(&[&[1.0, -1.0, 0.0], &[-1.0, 1.0, 0.0], &[0.0, 0.0, 2.0]]);
        let i = ComplexMatrix::identity(3);
        EquationSpec::new(vec![a, i.scale(c(2.0, 0.0))], vec![b, i], ComplexMatrix::zeros(3, 3)).unwrap()
    }

    fn jordan_stein() -> EquationSpec {
        let a = ComplexMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        let i = ComplexMatrix::identity(2);
        EquationSpec::new(vec![a.clone(), -&i], vec![a, i.clone()], i).unwrap()
    }

    #[test]
    fn swap_equation_solution_set() {
        let spec = swap_equation();
        let tol = Tolerances::default();
        let set = solve(&spec, &tol).unwrap();
        assert!(set.consistent);
        assert_eq!(set.dimension, 2);
        assert!(set.x_hat.max_abs() < 1e-12);
        assert_eq!(set.normal_certificate, Some(false));
        for e in &set.basis {
            assert!(spec.residual(e) < 1e-10);
            // the displayed family: row 3 vanishes, row 2 = −row 1, (1,1) = −(1,2)
            for j in 0..3 {
                assert!(e.get(2, j).norm() < 1e-10);
                assert!((e.get(1, j) + e.get(0, j)).norm() < 1e-10);
            }
            assert!((e.get(0, 0) + e.get(0, 1)).norm() < 1e-10);
        }
        let (ok, ev) = check_consistent(&spec, &tol).unwrap();
        assert!(ok && ev.checks.all_agree() && ev.checks.equation_consistent);
        assert_eq!(ev.oracle_dimension, 2);
        let report = uniqueness_report(&set, &spec, &tol).unwrap();
        assert!(report.infinite && !report.unique);
    }

    #[test]
    fn zero_rhs_gives_zero_candidate() {
        let a = ComplexMatrix::from_real_diagonal(&[1.0, 2.0]);
        let spec = EquationSpec::new(vec![a.clone()], vec![a], ComplexMatrix::zeros(2, 2)).unwrap();
        let set = solve(&spec, &Tolerances::default()).unwrap();
        assert!(set.consistent);
        assert!(set.x_hat.max_abs() == 0.0);
        assert_eq!(set.dimension, 0);
    }

    #[test]
    fn stein_candidates_are_zero() {
        assert!(x_hat(&jordan_stein()).unwrap().max_abs() < 1e-12);
        let a = ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]]);
        let cm = ComplexMatrix::from_real(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        let i = ComplexMatrix::identity(2);
        let spec = EquationSpec::new(vec![a.clone(), i.scale(c(-2.0, 0.0))], vec![a, i], cm).unwrap();
        assert!(x_hat(&spec).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn hypothesis_gates() {
        let tol = Tolerances::default();
        let err = solve(&jordan_stein(), &tol).unwrap_err();
        assert!(matches!(err, LmeError::HypothesisViolated(ref e) if matches!(**e, LmeError::NotDiagonalizable(_))));
        assert!(matches!(check_consistent(&jordan_stein(), &tol), Err(LmeError::HypothesisViolated(_))));
        assert!(matches!(solve_standard(&jordan_stein(), &tol), Err(LmeError::HypothesisViolated(_))));
    }

    #[test]
    fn standard_equation_cases() {
        let tol = Tolerances::default();
        let m = ComplexMatrix::from_real_diagonal(&[2.0, 4.0]);
        let rhs = ComplexMatrix::from_real(&[&[2.0, 0.0], &[0.0, 8.0]]);
        let spec = EquationSpec::new(vec![m], vec![ComplexMatrix::identity(2)], rhs).unwrap();
        let set = solve_standard(&spec, &tol).unwrap();
        assert_eq!(set.dimension, 0);
        assert!(set.x_hat.distance(&ComplexMatrix::from_real_diagonal(&[1.0, 2.0])) < 1e-12);
        assert!(uniqueness_report(&set, &spec, &tol).unwrap().standard_invertible);

        let z = ComplexMatrix::zeros(3, 3);
        let spec = EquationSpec::new(vec![z.clone()], vec![ComplexMatrix::identity(3)], z).unwrap();
        let set = solve_standard(&spec, &tol).unwrap();
        assert!(set.consistent);
        assert_eq!(set.dimension, 9);
    }

    #[test]
    fn inconsistent_report_is_refused() {
        let tol = Tolerances::default();
        let a = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]);
        let rhs = ComplexMatrix::from_real_diagonal(&[1.0, 1.0]);
        let spec = EquationSpec::new(vec![a], vec![ComplexMatrix::identity(2)], rhs).unwrap();
        let set = solve(&spec, &tol).unwrap();
        assert!(!set.consistent);
        assert_eq!(set.witness_r, Some(0));
        assert_eq!(uniqueness_report(&set, &spec, &tol).unwrap_err(), LmeError::InconsistentInput);
        let (_, ev) = check_consistent(&spec, &tol).unwrap();
        assert_eq!(ev.checks.as_array(), [false; 5]);
    }

    #[test]
    fn reflection_stein_family_does_not_commute_with_a() {
        let a = ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]]);
        let cm = ComplexMatrix::from_real(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        let i = ComplexMatrix::identity(2);
        let spec = EquationSpec::new(vec![a.clone(), i.scale(c(-2.0, 0.0))], vec![a, i], cm).unwrap();
        let tol = Tolerances::default();
        for (p, q) in [(0.0, 0.0), (1.0, -2.0), (0.5, 3.0)] {
            let x = ComplexMatrix::from_real(&[&[2.0 * p + q - 0.5, p - 0.5], &[p, q]]);
            let check = commutation_check(&spec, &x, &ComplexMatrix::zeros(2, 2), &tol).unwrap();
            assert!(check.is_solution);
            assert!(check.a_commutators[0] > 0.1);
            assert!(!check.commutes_with_all);
        }
    }
}
