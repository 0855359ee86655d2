//! Command-line front end for `lme-core`.

pub mod error;
pub mod format;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lme_core::lme::{
    consistency_evidence, named_spec, pair_count, solve, solve_named, EquationSpec, NamedForm,
};
use lme_core::oracle::{compare, oracle_solve, vectorize};
use lme_core::random::{random_instance, seeded, RhsMode};
use lme_core::simdiag::{induced_pair_without_diagonalizer, simultaneous_diagonalizer, validate_family};
use lme_core::{Complex, ComplexMatrix, LmeError, Tolerances};
use rand::Rng;
use serde::Serialize;

use error::{is_hypothesis, CliError, Outcome};
use format::{MatrixFile, MatrixPayload};
use report::{BlockReport, DiagonalizeReport, PairReport, SolveReport, VerifyReport};

pub const TOLERANCE_ENV: &str = "LME_DEFAULT_TOL";

/// Cross-residual bound used when comparing against the oracle.
const VERIFY_TOL: f64 = 1e-7;

#[derive(Debug, Parser)]
#[command(name = "lme", version, about = "Consistency and solution sets of Σ AⱼXBⱼ = C over commuting diagonalizable parameters")]
pub struct Cli {
    #[command(flatten)]
    pub tolerances: ToleranceArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Zero test for relevant-matrix entries and induced right-hand sides
    #[arg(long, global = true)]
    pub tol_zero: Option<f64>,
    /// Eigenvalue clustering gap
    #[arg(long, global = true)]
    pub tol_cluster: Option<f64>,
    /// Residual bound for emitted solutions
    #[arg(long, global = true)]
    pub tol_res: Option<f64>,
    /// Relative singular value cutoff
    #[arg(long, global = true)]
    pub tol_rank: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve Σ AⱼXBⱼ = C
    Solve(SolveArgs),
    /// AX + XB = C
    Sylvester(PairArgs),
    /// AXB − X = C
    Stein(PairArgs),
    /// A⋆X + XA = C
    Clyap(SingleArgs),
    /// A⋆XA − X = C
    Dlyap(SingleArgs),
    /// Cross-check the solver against the Kronecker oracle
    Verify(VerifyArgs),
    /// Simultaneously diagonalize commuting matrices
    Diagonalize(DiagonalizeArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EquationFiles {
    /// Left coefficient files, one per term
    #[arg(long = "a", required = true)]
    pub a: Vec<PathBuf>,
    /// Right coefficient files, one per term
    #[arg(long = "b", required = true)]
    pub b: Vec<PathBuf>,
    /// Right-hand side
    #[arg(long = "c")]
    pub c: PathBuf,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub files: EquationFiles,
    /// Answer hypothesis-violating inputs with the Kronecker oracle
    #[arg(long)]
    pub force_oracle: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long = "a")]
    pub a: PathBuf,
    #[arg(long = "b")]
    pub b: PathBuf,
    #[arg(long = "c")]
    pub c: PathBuf,
    #[arg(long)]
    pub force_oracle: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SingleArgs {
    #[arg(long = "a")]
    pub a: PathBuf,
    #[arg(long = "c")]
    pub c: PathBuf,
    #[arg(long)]
    pub force_oracle: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of random instances
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Matrix order of random instances
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Corrupt every solver answer before comparing
    #[arg(long)]
    pub inject_fault: bool,
    #[arg(long = "a", requires_all = ["b", "c"])]
    pub a: Vec<PathBuf>,
    #[arg(long = "b", requires = "a")]
    pub b: Vec<PathBuf>,
    #[arg(long = "c", requires = "a")]
    pub c: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct DiagonalizeArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Pair two matrices without a diagonalizer
    #[arg(long)]
    pub pair: bool,
    #[command(flatten)]
    pub output: Output,
}

impl ToleranceArgs {
    /// Defaults, then the environment override, then flags.
    pub fn resolve(&self, env: Option<&str>) -> Result<Tolerances, CliError> {
        let mut tol = match env {
            Some(v) => Tolerances::uniform(positive(TOLERANCE_ENV, v.trim().parse().ok())?),
            None => Tolerances::default(),
        };
        let flags = [
            ("--tol-zero", self.tol_zero, &mut tol.zero),
            ("--tol-cluster", self.tol_cluster, &mut tol.cluster),
            ("--tol-res", self.tol_res, &mut tol.res),
            ("--tol-rank", self.tol_rank, &mut tol.rank),
        ];
        for (name, value, slot) in flags {
            if let Some(v) = value {
                *slot = positive(name, Some(v))?;
            }
        }
        Ok(tol)
    }
}

fn positive(name: &str, value: Option<f64>) -> Result<f64, CliError> {
    match value {
        Some(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(CliError::Usage(format!("{name} must be a positive number"))),
    }
}

/// Parses `args`, runs the command and returns the exit code.
pub fn main_with_args(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Outcome::Failure.code() } else { 0 };
        }
    };
    let env = std::env::var(TOLERANCE_ENV).ok();
    let result = cli
        .tolerances
        .resolve(env.as_deref())
        .and_then(|tol| run(&cli.command, &tol));
    match result {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.outcome().code()
        }
    }
}

pub fn run(command: &Command, tol: &Tolerances) -> Result<Outcome, CliError> {
    match command {
        Command::Solve(args) => cmd_solve(args, tol),
        Command::Sylvester(args) => cmd_named(NamedForm::Sylvester, &args.a, Some(&args.b), &args.c, args.force_oracle, &args.output, tol),
        Command::Stein(args) => cmd_named(NamedForm::Stein, &args.a, Some(&args.b), &args.c, args.force_oracle, &args.output, tol),
        Command::Clyap(args) => cmd_named(NamedForm::ContinuousLyapunov, &args.a, None, &args.c, args.force_oracle, &args.output, tol),
        Command::Dlyap(args) => cmd_named(NamedForm::DiscreteLyapunov, &args.a, None, &args.c, args.force_oracle, &args.output, tol),
        Command::Verify(args) => cmd_verify(args, tol),
        Command::Diagonalize(args) => cmd_diagonalize(args, tol),
    }
}

fn read_all(paths: &[PathBuf]) -> Result<Vec<MatrixFile>, CliError> {
    paths.iter().map(|p| MatrixFile::read(p)).collect()
}

fn read(path: &Path) -> Result<ComplexMatrix, CliError> {
    Ok(MatrixFile::read(path)?.matrix)
}

fn load_equation(files: &EquationFiles) -> Result<(EquationSpec, Vec<String>), CliError> {
    if files.a.len() != files.b.len() {
        return Err(CliError::Usage(format!(
            "{} --a files but {} --b files",
            files.a.len(),
            files.b.len()
        )));
    }
    let a = read_all(&files.a)?;
    let b = read_all(&files.b)?;
    let c = MatrixFile::read(&files.c)?;
    let k = a.len();
    let labels: Vec<String> = (1..=k)
        .map(|j| format!("A{j} ({})", a[j - 1].name))
        .chain((1..=k).map(|j| format!("B{j} ({})", b[j - 1].name)))
        .chain(std::iter::once(format!("C ({})", c.name)))
        .collect();
    let spec = EquationSpec::new(
        a.into_iter().map(|f| f.matrix).collect(),
        b.into_iter().map(|f| f.matrix).collect(),
        c.matrix,
    )?;
    Ok((spec, labels))
}

fn emit<T: Serialize>(report: &T, output: &Output, summary: &str) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
    match &output.out {
        Some(path) => {
            std::fs::write(path, json).map_err(|e| CliError::Io(path.display().to_string(), e))?;
            println!("{summary}");
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(json.as_bytes())
                .map_err(|e| CliError::Io("stdout".into(), e))?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn solved_outcome(consistent: bool) -> Outcome {
    if consistent {
        Outcome::Consistent
    } else {
        Outcome::Inconsistent
    }
}

fn oracle_warning(reason: &str) -> String {
    format!(
        "WARNING: {reason}; the commuting diagonalizable structure is absent, so this answer comes from the Kronecker oracle"
    )
}

fn oracle_report(spec: &EquationSpec, reason: &str, tol: &Tolerances) -> SolveReport {
    eprintln!("{}", oracle_warning(reason));
    SolveReport::from_oracle(&oracle_solve(&vectorize(spec), tol.rank), oracle_warning(reason))
}

fn cmd_solve(args: &SolveArgs, tol: &Tolerances) -> Result<Outcome, CliError> {
    let (spec, labels) = load_equation(&args.files)?;
    let report = match solve(&spec, tol) {
        Ok(set) => {
            let (_, evidence) = consistency_evidence(&spec, &set, tol);
            SolveReport::from_solution(&spec, &set, &evidence)
        }
        Err(e) if args.force_oracle && is_hypothesis(&e) => {
            oracle_report(&spec, &error::describe(&e, &labels), tol)
        }
        Err(e) => return Err(CliError::labelled(e, &labels)),
    };
    emit(&report, &args.output, &report.summary())?;
    Ok(solved_outcome(report.consistent))
}

fn named_labels(form: NamedForm) -> Vec<String> {
    let l: [&str; 5] = match form {
        NamedForm::Sylvester => ["A", "I", "I", "B", "C"],
        NamedForm::Stein => ["A", "-I", "B", "I", "C"],
        NamedForm::ContinuousLyapunov => ["A*", "I", "I", "A", "C"],
        NamedForm::DiscreteLyapunov => ["A*", "-I", "A", "I", "C"],
    };
    l.iter().map(|s| s.to_string()).collect()
}

fn cmd_named(
    form: NamedForm,
    a: &Path,
    b: Option<&PathBuf>,
    c: &Path,
    force_oracle: bool,
    output: &Output,
    tol: &Tolerances,
) -> Result<Outcome, CliError> {
    let a = read(a)?;
    let b = b.map(|p| read(p)).transpose()?;
    let c = read(c)?;
    let labels = named_labels(form);
    let mut report = match solve_named(form, &a, b.as_ref(), &c, tol) {
        Ok(named) => {
            let spec = named_spec(form, &a, b.as_ref(), &c)?;
            let (_, evidence) = consistency_evidence(&spec, &named.solution, tol);
            SolveReport::from_solution(&spec, &named.solution, &evidence)
        }
        Err(e) if force_oracle && is_hypothesis(&e) => {
            let spec = named_spec(form, &a, b.as_ref(), &c)?;
            oracle_report(&spec, &error::describe(&e, &labels), tol)
        }
        Err(e) => return Err(CliError::labelled(e, &labels)),
    };
    match pair_count(form, &a, b.as_ref(), tol) {
        Ok(count) => report.diagnostics.push(format!(
            "{} dimension formula: #{{(r, s) : {}}} = {count}",
            form.name(),
            form.pair_condition()
        )),
        Err(e) => report.diagnostics.push(format!("dimension formula unavailable: {e}")),
    }
    emit(&report, output, &format!("{}: {}", form.name(), report.summary()))?;
    Ok(solved_outcome(report.consistent))
}

/// Adds a spurious basis matrix, so the dimension no longer matches.
fn corrupt(set: &mut lme_core::lme::AffineSolutionSet) {
    let n = set.x_hat.rows();
    set.basis.push(ComplexMatrix::identity(n));
    set.dimension += 1;
}

fn cmd_verify(args: &VerifyArgs, tol: &Tolerances) -> Result<Outcome, CliError> {
    let mut specs: Vec<(String, EquationSpec, Vec<String>)> = Vec::new();
    if let Some(c) = &args.c {
        let files = EquationFiles {
            a: args.a.clone(),
            b: args.b.clone(),
            c: c.clone(),
        };
        let (spec, labels) = load_equation(&files)?;
        specs.push(("input".into(), spec, labels));
    } else {
        if args.n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        let mut rng = seeded(args.seed);
        for t in 0..args.trials {
            let k = rng.random_range(1..=3);
            let inst = random_instance(&mut rng, args.n, k, RhsMode::Free);
            specs.push((format!("trial {t}"), inst.spec, Vec::new()));
        }
    }

    let mut report = VerifyReport {
        trials: specs.len(),
        agreements: 0,
        mismatches: Vec::new(),
        skipped: Vec::new(),
        max_basis_residual: 0.0,
        max_x_hat_residual: 0.0,
    };
    let file_mode = args.c.is_some();
    for (name, spec, labels) in &specs {
        let mut set = match solve(spec, tol) {
            Ok(set) => set,
            Err(e) if file_mode => return Err(CliError::labelled(e, labels)),
            Err(e) => {
                report.skipped.push(format!("{name}: {e}"));
                continue;
            }
        };
        if args.inject_fault {
            corrupt(&mut set);
        }
        match compare(&set, &vectorize(spec), VERIFY_TOL, tol.rank) {
            Ok(cmp) => {
                report.agreements += 1;
                report.max_basis_residual = report.max_basis_residual.max(cmp.basis_residual);
                if let Some(r) = cmp.x_hat_residual {
                    report.max_x_hat_residual = report.max_x_hat_residual.max(r);
                }
            }
            Err(e) => report.mismatches.push(format!("{name}: {e}")),
        }
    }
    let summary = format!(
        "{} of {} instances agree with the oracle{}",
        report.agreements,
        report.trials,
        if report.skipped.is_empty() {
            String::new()
        } else {
            format!(", {} skipped", report.skipped.len())
        }
    );
    emit(&report, &args.output, &summary)?;
    Ok(if report.mismatches.is_empty() && report.skipped.is_empty() {
        Outcome::Consistent
    } else {
        Outcome::Mismatch
    })
}

fn pair_of(z: &Complex) -> [f64; 2] {
    [z.re, z.im]
}

fn cmd_diagonalize(args: &DiagonalizeArgs, tol: &Tolerances) -> Result<Outcome, CliError> {
    let files = read_all(&args.files)?;
    let labels: Vec<String> = files.iter().map(|f| f.name.clone()).collect();
    let members: Vec<ComplexMatrix> = files.into_iter().map(|f| f.matrix).collect();
    let labelled = |e: LmeError| CliError::labelled(e, &labels);
    let family = validate_family(members.clone(), tol).map_err(labelled)?;
    let seq = simultaneous_diagonalizer(&family).map_err(labelled)?;
    let pair = if args.pair {
        let [a, b] = members.as_slice() else {
            return Err(CliError::Usage("--pair needs exactly two matrices".into()));
        };
        let p = induced_pair_without_diagonalizer(a, b, tol).map_err(labelled)?;
        Some(PairReport {
            a: p.a.iter().map(pair_of).collect(),
            b: p.b.iter().map(pair_of).collect(),
            excluded: p.excluded.iter().map(pair_of).collect(),
            beta: pair_of(&p.beta),
        })
    } else {
        None
    };
    let report = DiagonalizeReport {
        diagonalizer: MatrixPayload::from_matrix(&seq.diagonalizer),
        induced_vectors: seq.vectors.iter().map(|v| v.iter().map(pair_of).collect()).collect(),
        block_tree: seq
            .block_tree
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|b| BlockReport {
                        start: b.start,
                        len: b.len,
                        parent: b.parent,
                        value: pair_of(&b.value),
                    })
                    .collect()
            })
            .collect(),
        pair,
    };
    let summary = format!(
        "{} commuting matrices diagonalized; leaf blocks {:?}",
        members.len(),
        seq.leaf_sizes()
    );
    emit(&report, &args.output, &summary)?;
    Ok(Outcome::Consistent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("lme").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_override_environment() {
        let cli = parse(&["--tol-rank", "1e-12", "diagonalize", "m.json"]);
        let tol = cli.tolerances.resolve(Some("1e-6")).unwrap();
        assert_eq!(tol.rank, 1e-12);
        assert_eq!(tol.zero, 1e-6);
        assert_eq!(tol.commute, 1e-6);
        assert_eq!(cli.tolerances.resolve(None).unwrap().zero, Tolerances::default().zero);
    }

    #[test]
    fn bad_tolerances_are_rejected() {
        let cli = parse(&["diagonalize", "m.json"]);
        assert!(cli.tolerances.resolve(Some("abc")).is_err());
        let cli = parse(&["--tol-zero=-1", "diagonalize", "m.json"]);
        assert!(cli.tolerances.resolve(None).is_err());
    }

    #[test]
    fn tolerance_flags_are_global() {
        let cli = parse(&["solve", "--a", "a", "--b", "b", "--c", "c", "--tol-zero", "1e-9"]);
        assert_eq!(cli.tolerances.tol_zero, Some(1e-9));
    }
}
