use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain size must be at least 1")]
    EmptyDomain,
    #[error("a concept class needs at least one concept")]
    EmptyClass,
    #[error("element {element} of concept `{concept}` is outside the domain of size {domain}")]
    ElementOutOfDomain { concept: String, element: u32, domain: u32 },
    #[error("duplicate concept name `{0}`")]
    DuplicateName(String),
    #[error("invalid concept name `{0}`")]
    InvalidName(String),
    #[error("concept index {index} out of range for a class of {len} concepts")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("element {0} appears with both labels")]
    ConflictingLabels(u32),
    #[error("domain of size {needed} exceeds the configured bound {bound}")]
    DomainOverflow { needed: u64, bound: u32 },
    #[error("teaching-dimension bound d must be at least 1 (use is_distinguishing_set with the empty set for d = 0)")]
    ZeroBound,
    #[error("{what} is limited to {limit}, got {got}")]
    SizeBound { what: &'static str, limit: usize, got: usize },
    #[error("concept index {0} is not covered by the sequence")]
    MissingFromSequence(usize),
    #[error("concept index {0} appears in more than one block")]
    RepeatedInSequence(usize),
    #[error("block {0} of the sequence is empty")]
    EmptyBlock(usize),
    #[error("stage {stage} exceeds the stage horizon {horizon}")]
    StageHorizon { stage: u32, horizon: u32 },
    #[error("horizon too small: {0}")]
    HorizonTooSmall(String),
    #[error("cannot parse set descriptor `{0}`")]
    Descriptor(String),
    #[error("arithmetic overflow while coding {0}")]
    CodeOverflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
