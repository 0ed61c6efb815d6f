use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("operation requires a finite-type diagram")]
    NonFiniteType,
    #[error("arm too short: {0}")]
    ArmTooShort(String),
    #[error("operation requires the full orbit, but the poset is truncated")]
    TruncatedOrbit,
    #[error("weight is not dominant")]
    NonDominant,
    #[error("K-polynomial is not divisible by (1-t)^{codim}")]
    NotDivisible { codim: usize },
    #[error("invalid resolution format: {0}")]
    InvalidFormat(String),
    #[error("invalid complete intersection degrees for this format: {0}")]
    InvalidLinkage(String),
    #[error("twist shift {shift} is too small (max twist {max_twist})")]
    ShiftTooSmall { shift: u32, max_twist: u32 },
    #[error("no integer solution: {0}")]
    NoIntegerSolution(String),
    #[error("partition has more than {n} parts")]
    TooManyParts { n: usize },
    #[error("wedge degree overflow: {0} + {1} exceeds the module rank")]
    DegreeOverflow(usize, usize),
    #[error("wrong split shape for the requested variety: {0}")]
    WrongSplit(String),
    #[error("unsupported dialect `{0}`")]
    UnsupportedDialect(String),
    #[error("missing reduced word for coset element {0}")]
    MissingWord(usize),
}
