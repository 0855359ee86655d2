use lme_core::LmeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, #[source] std::io::Error),

    #[error("cannot parse {0}: {1}")]
    Parse(String, String),

    #[error("{0}")]
    Usage(String),

    #[error("{message}")]
    Lme { message: String, source: LmeError },
}

impl From<LmeError> for CliError {
    fn from(source: LmeError) -> Self {
        CliError::Lme {
            message: source.to_string(),
            source,
        }
    }
}

impl CliError {
    /// Library error described with member labels.
    pub fn labelled(source: LmeError, labels: &[String]) -> Self {
        CliError::Lme {
            message: describe(&source, labels),
            source,
        }
    }
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Consistent,
    Failure,
    HypothesisViolated,
    Inconsistent,
    Mismatch,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Consistent => 0,
            Outcome::Failure => 1,
            Outcome::HypothesisViolated => 2,
            Outcome::Inconsistent => 3,
            Outcome::Mismatch => 4,
        }
    }
}

pub fn is_hypothesis(e: &LmeError) -> bool {
    matches!(
        e,
        LmeError::HypothesisViolated(_)
            | LmeError::NotCommuting(..)
            | LmeError::NotDiagonalizable(_)
            | LmeError::NotNormal
            | LmeError::NotHermitianRhs
    )
}

impl CliError {
    pub fn outcome(&self) -> Outcome {
        match self {
            CliError::Lme { source: e, .. } if is_hypothesis(e) => Outcome::HypothesisViolated,
            CliError::Lme { source: LmeError::Mismatch(_), .. } => Outcome::Mismatch,
            CliError::Lme { source: LmeError::InconsistentInput, .. } => Outcome::Inconsistent,
            _ => Outcome::Failure,
        }
    }
}

/// Variant name plus message, with member indices replaced by labels.
pub fn describe(e: &LmeError, labels: &[String]) -> String {
    let label = |i: usize| labels.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
    match e {
        LmeError::HypothesisViolated(inner) => format!("hypothesis violated: {}", describe(inner, labels)),
        LmeError::NotCommuting(i, j) => {
            format!("NotCommuting({i}, {j}): {} and {} do not commute", label(*i), label(*j))
        }
        LmeError::NotDiagonalizable(i) => {
            format!("NotDiagonalizable({i}): {} is not diagonalizable", label(*i))
        }
        LmeError::NotNormal => format!("NotNormal: {e}"),
        LmeError::NotHermitianRhs => format!("NotHermitianRhs: {e}"),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_outcome_has_its_own_code() {
        let all = [
            Outcome::Consistent,
            Outcome::Failure,
            Outcome::HypothesisViolated,
            Outcome::Inconsistent,
            Outcome::Mismatch,
        ];
        let mut codes: Vec<i32> = all.iter().map(|o| o.code()).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn errors_map_to_outcomes() {
        let hyp = CliError::from(LmeError::HypothesisViolated(Box::new(LmeError::NotCommuting(0, 1))));
        assert_eq!(hyp.outcome(), Outcome::HypothesisViolated);
        assert_eq!(CliError::from(LmeError::NotNormal).outcome(), Outcome::HypothesisViolated);
        assert_eq!(CliError::from(LmeError::Mismatch("x".into())).outcome(), Outcome::Mismatch);
        assert_eq!(CliError::Parse("f".into(), "bad".into()).outcome(), Outcome::Failure);
        assert_eq!(CliError::from(LmeError::Singular).outcome(), Outcome::Failure);
    }

    #[test]
    fn descriptions_use_labels() {
        let labels = vec!["A1".to_string(), "B1".to_string(), "C".to_string()];
        let e = LmeError::HypothesisViolated(Box::new(LmeError::NotCommuting(0, 2)));
        assert_eq!(
            describe(&e, &labels),
            "hypothesis violated: NotCommuting(0, 2): A1 and C do not commute"
        );
    }
}
