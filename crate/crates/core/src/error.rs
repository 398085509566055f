use alloc::string::String;

/// Errors raised by the exact-arithmetic and refinement engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rotation angle: {0}")]
    InvalidAlpha(String),
    #[error("continued fraction depth {requested} exceeds the cap of {cap}")]
    DepthCap { requested: usize, cap: usize },
    #[error("convergent table of depth {depth} is too shallow (need {needed})")]
    TableTooShallow { depth: usize, needed: usize },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("partitions are defined over different rotation angles")]
    MismatchedAlpha,
    #[error("duplicate cutpoint in partition input")]
    DuplicateCut,
    #[error("empty input")]
    EmptyInput,
    #[error("operation requires a non-trivial partition")]
    TrivialPartition,
    #[error("partition is not Sturmian-measurable (cut {0} is not a backward orbit point of 0)")]
    NotSturmianMeasurable(String),
    #[error("resource cap exceeded: {what} = {requested} > {limit}")]
    ResourceCap {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("refinement power cap {0} reached without a witness")]
    PowerExhausted(usize),
    #[error("level {level} of the tower straddles a cutpoint of the partition")]
    NotCoded { level: i64 },
    #[error("levels of the tower are not pairwise disjoint")]
    NotATower,
    #[error("boundary conditions violated: {0}")]
    BoundaryConditions(&'static str),
    #[error("hypotheses violated: {0}")]
    Hypotheses(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("word is not in the language of the subshift")]
    NotInLanguage,
    #[error("word of length {len} is shorter than the rule width {width}")]
    WordTooShort { len: usize, width: usize },
}

impl Error {
    /// True for errors caused by a configured size limit rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::ResourceCap { .. }
                | Error::DepthCap { .. }
                | Error::PowerExhausted(_)
                | Error::Overflow(_)
        )
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
