use thiserror::Error;

/// Every domain failure the library can report.
///
/// [`Error::name`] gives the stable kebab-case identifier printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("blocks {0:?} contain adjacent vertices")]
    AdjacentIdentification(Vec<usize>),
    #[error("partition {0} has more than {1} parts")]
    LengthExceedsN(String, usize),
    #[error("expected basis {expected}, found {found}")]
    WrongBasis { expected: String, found: String },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a spider: {0}")]
    NotASpider(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("ambiguous input: {0}")]
    Ambiguous(String),
    #[error("inconsistent coefficients: {0}")]
    InconsistentCoefficients(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("spider has {0} legs, formula needs at least 4")]
    LegsBelow4(usize),
    #[error("eigen decomposition failed: {0}")]
    EigenConvergenceFailure(String),
    #[error("integer root extraction failed: {0}")]
    RootExtractionFailure(String),
    #[error("n = {n} is below the required threshold {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("n = {n} exceeds the supported maximum {max}")]
    NTooLarge { n: usize, max: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("graph has a loop")]
    GHasLoop,
    #[error("graph has {found} vertices, more than {max}")]
    GTooLarge { found: usize, max: usize },
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::Parse(_) => "parse-error",
            Error::InvalidPartition(_) => "invalid-partition",
            Error::AdjacentIdentification(_) => "adjacent-identification",
            Error::LengthExceedsN(..) => "length-exceeds-n",
            Error::WrongBasis { .. } => "wrong-basis",
            Error::SizeMismatch { .. } => "size-mismatch",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::NotASpider(_) => "not-a-spider",
            Error::NotBipartite => "not-bipartite",
            Error::Ambiguous(_) => "ambiguous",
            Error::InconsistentCoefficients(_) => "inconsistent-coefficients",
            Error::NotATree => "not-a-tree",
            Error::LegsBelow4(_) => "legs-below-4",
            Error::EigenConvergenceFailure(_) => "eigen-convergence-failure",
            Error::RootExtractionFailure(_) => "root-extraction-failure",
            Error::NTooSmall { .. } => "n-too-small",
            Error::NTooLarge { .. } => "n-too-large",
            Error::HypothesisViolated(_) => "hypothesis-violated",
            Error::GHasLoop => "G-has-loop",
            Error::GTooLarge { .. } => "G-too-large",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
