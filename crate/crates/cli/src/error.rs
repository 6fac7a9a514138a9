use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProblemError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` directive")]
    MissingDirective(&'static str),
    #[error("line {line}: `{directive}` given more than once")]
    RepeatedDirective {
        line: usize,
        directive: &'static str,
    },
    #[error("line {line}: component {component}: unknown linguistic variable {token:?} (expected one of VL L FL M FH H VH)")]
    UnknownLinguistic {
        line: usize,
        component: usize,
        token: String,
    },
    #[error("component {0} is listed more than once")]
    DuplicateComponent(usize),
    #[error("component {0} has neither a reliability nor ratings")]
    MissingComponent(usize),
    #[error("component {0} does not exist")]
    UnknownComponent(usize),
    #[error("component {0} is a terminal and is always up")]
    TerminalComponent(usize),
    #[error("component {component}: reliability {p} is outside [0, 1]")]
    ProbabilityOutOfRange { component: usize, p: f64 },
    #[error("component {component}: {found} ratings, other components have {expected}")]
    ExpertCountMismatch {
        component: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid network: {0}")]
    Network(relcalc_core::Error),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Engine(#[from] relcalc_core::Error),
}
