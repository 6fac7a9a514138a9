use thiserror::Error;

use crate::model::Mode;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a network needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("arc {0}-{0} is a self-loop")]
    SelfLoop(usize),
    #[error("arc {0}-{1} appears more than once")]
    DuplicateArc(usize, usize),
    #[error("arc endpoint {endpoint} is outside 1..={nodes}")]
    EndpointOutOfRange { endpoint: usize, nodes: usize },
    #[error("an AOA enumeration needs at least one arc")]
    NoArcs,

    #[error("expected a {expected:?} state vector, got {found:?}")]
    ModeMismatch { expected: Mode, found: Mode },
    #[error("state vector has {found} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("terminal node {0} must be up in an AON state vector")]
    TerminalDown(usize),

    #[error("component {0} does not exist in the network")]
    UnknownComponent(usize),
    #[error("component {0} is a perfectly reliable terminal and takes no probability")]
    TerminalComponent(usize),
    #[error("component {0} has more than one probability")]
    DuplicateComponent(usize),
    #[error("component {0} has no probability")]
    MissingComponent(usize),
    #[error("probability {p} of component {component} is outside [0, 1]")]
    ProbabilityOutOfRange { component: usize, p: f64 },

    #[error("invalid triangular fuzzy number ({0}, {1}, {2}): need a <= b <= c")]
    InvalidFuzzyNumber(f64, f64, f64),
    #[error("fuzzy number ({0}, {1}, {2}) is not contained in [0, 1]")]
    FuzzyNumberOutsideUnit(f64, f64, f64),
    #[error("fuzzy {op} needs {requirement}")]
    FuzzyDomain {
        op: &'static str,
        requirement: &'static str,
    },
    #[error("alpha level {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("possibility score {0} is outside [0, 1]")]
    ScoreOutOfRange(f64),
    #[error("component {component} has {found} ratings, expected {expected}")]
    ExpertCountMismatch {
        component: usize,
        expected: usize,
        found: usize,
    },
    #[error("at least one expert rating is required")]
    NoRatings,
    #[error("unknown linguistic variable {0:?}")]
    UnknownLinguistic(String),

    #[error("{bits} mutable components exceed the enumeration limit of {limit}")]
    TooLarge { bits: usize, limit: usize },
    #[error("start index {start} is past the end of a {total}-vector enumeration")]
    StartOutOfRange { start: u64, total: u64 },
    #[error("sample count must be positive")]
    NoSamples,
}
