use thiserror::Error;

use crate::graph::Coloring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them. Theory violations
/// (`TheoremViolation`, `LevelNeedsMoreThanThreeColors`,
/// `IncomparableTwinOSets`) mean an input broke a bound that should hold for
/// degree-3 structures, or that the implementation has a bug.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid event id {0:?}: ids match [A-Za-z0-9_.-]+")]
    InvalidEventId(String),
    #[error("DuplicateEvent: {0}")]
    DuplicateEvent(String),
    #[error("UnknownEvent: {0}")]
    UnknownEvent(String),
    #[error("CycleInCovers: cycle through {0}")]
    CycleInCovers(String),
    #[error("RedundantCoverEdge: {0} -> {1} is implied by other covers")]
    RedundantCoverEdge(String, String),
    #[error("ConflictBetweenComparable: {0} # {1} but the events are comparable")]
    ConflictBetweenComparable(String, String),
    #[error("XNotInY: {0} is not a member of the avoided set")]
    XNotInY(String),

    #[error("SizeLimitExceeded: {size} vertices exceeds the exact limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("ExceedsCap: no coloring with at most {cap} colors (best found uses {})", best.num_colors)]
    ExceedsCap { cap: usize, best: Coloring },
    #[error("NotAnAntichain: {0} and {1} are comparable")]
    NotAnAntichain(String, String),
    #[error("BadOrder: {0}")]
    BadOrder(String),

    #[error("DomainTooLarge: more than {reached} configurations")]
    DomainTooLarge { reached: usize },

    #[error("UnlabelledEvent: {0}")]
    UnlabelledEvent(String),
    #[error("NotStratifying: {0} and {1} share level {2} but are comparable")]
    NotStratifying(String, String, usize),
    #[error("LevelNeedsMoreThanThreeColors: level {level} needs {colors} colors")]
    LevelNeedsMoreThanThreeColors { level: usize, colors: usize },
    #[error("NotATree: {0}")]
    NotATree(String),
    #[error("IncomparableTwinOSets: O-sets of twins {0} and {1} are incomparable")]
    IncomparableTwinOSets(String, String),
    #[error("NotAForest: event {0} has more than one lower cover")]
    NotAForest(String),
    #[error("DegreeExceedsThree: degree is {0}")]
    DegreeExceedsThree(usize),
    #[error("TheoremViolation: {claim} (witness {witness})")]
    TheoremViolation { claim: String, witness: String },
    #[error("ClassNotThreeLabellable: class {0}")]
    ClassNotThreeLabellable(String),
    #[error("BadQuotientColoring: {0}")]
    BadQuotientColoring(String),
    #[error("NotSimple: {condition} (witness {witness})")]
    NotSimple { condition: String, witness: String },

    #[error("GenerationFailed: {0}")]
    GenerationFailed(String),
    #[error("UnknownFixture: {0}")]
    UnknownFixture(String),

    #[error("SyntaxError at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
}

impl Error {
    pub(crate) fn theorem(claim: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::TheoremViolation { claim: claim.into(), witness: witness.into() }
    }

    /// Short machine-readable name of the variant, as printed by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidEventId(_) => "InvalidEventId",
            Error::DuplicateEvent(_) => "DuplicateEvent",
            Error::UnknownEvent(_) => "UnknownEvent",
            Error::CycleInCovers(_) => "CycleInCovers",
            Error::RedundantCoverEdge(..) => "RedundantCoverEdge",
            Error::ConflictBetweenComparable(..) => "ConflictBetweenComparable",
            Error::XNotInY(_) => "XNotInY",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::ExceedsCap { .. } => "ExceedsCap",
            Error::NotAnAntichain(..) => "NotAnAntichain",
            Error::BadOrder(_) => "BadOrder",
            Error::DomainTooLarge { .. } => "DomainTooLarge",
            Error::UnlabelledEvent(_) => "UnlabelledEvent",
            Error::NotStratifying(..) => "NotStratifying",
            Error::LevelNeedsMoreThanThreeColors { .. } => "LevelNeedsMoreThanThreeColors",
            Error::NotATree(_) => "NotATree",
            Error::IncomparableTwinOSets(..) => "IncomparableTwinOSets",
            Error::NotAForest(_) => "NotAForest",
            Error::DegreeExceedsThree(_) => "DegreeExceedsThree",
            Error::TheoremViolation { .. } => "TheoremViolation",
            Error::ClassNotThreeLabellable(_) => "ClassNotThreeLabellable",
            Error::BadQuotientColoring(_) => "BadQuotientColoring",
            Error::NotSimple { .. } => "NotSimple",
            Error::GenerationFailed(_) => "GenerationFailed",
            Error::UnknownFixture(_) => "UnknownFixture",
            Error::Syntax { .. } => "SyntaxError",
        }
    }

    /// True for errors that signal a broken bound rather than bad input.
    pub fn is_theory_violation(&self) -> bool {
        matches!(
            self,
            Error::TheoremViolation { .. }
                | Error::LevelNeedsMoreThanThreeColors { .. }
                | Error::IncomparableTwinOSets(..)
        )
    }
}
