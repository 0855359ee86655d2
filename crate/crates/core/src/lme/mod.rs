//! Linear matrix equations `Σⱼ AⱼXBⱼ = C` over a commuting diagonalizable family.

mod equation;
mod named;
mod relevant;
mod solve;

pub use equation::EquationSpec;
pub use named::{
    named_form_diagnostics, named_spec, pair_count, solve_continuous_lyapunov,
    solve_discrete_lyapunov, solve_named, solve_stein, solve_sylvester, NamedForm,
    NamedFormDiagnostics, NamedSolution,
};
pub use relevant::{relevant_matrix, RelevantMatrix};
pub use solve::{
    check_consistent, commutation_check, consistency_evidence, solve, solve_standard, uniqueness_report, x_hat,
    x_hat_with_tol, AffineSolutionSet, CommutationCheck, ConsistencyEvidence, EquivalenceChecks,
    UniquenessReport,
};
