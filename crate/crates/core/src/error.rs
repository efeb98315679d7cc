use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a sphere braid group needs at least 3 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator x{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("unrecognised word token `{0}`")]
    BadToken(String),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("reducible type h={h} out of range 1..={max} for genus {genus}")]
    ReducibleOutOfRange { h: u32, max: u32, genus: u32 },
    #[error("genus must be at least 1, got {0}")]
    BadGenus(u32),
    #[error("invalid monodromy: {0}")]
    InvalidMonodromy(String),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("classes live on different bundles: n={0} vs n={1}")]
    BundleMismatch(i64, i64),
    #[error("not the class of an embedded curve: {0}")]
    NotACurveClass(String),
    #[error("no branch class with even fibre coefficient fits mu_virt={mu_virt} in genus {genus}")]
    NoSolution { genus: u32, mu_virt: i64 },
    #[error("genus {genus}, mu_virt={mu_virt}: both bundles n=0 and n=1 admit a branch class; supply a bundle hint")]
    Ambiguous { genus: u32, mu_virt: i64 },
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("move position {position} out of range for a tuple of length {len}")]
    MoveOutOfRange { position: usize, len: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: {source}")]
    Located { line: usize, column: usize, source: Box<Error> },
}
