use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows have mixed lengths ({expected} vs {found})")]
    MixedLength { expected: usize, found: usize },
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("search budget of {budget} exhausted")]
    BudgetExceeded { budget: usize },
    #[error("target is not reachable from the given generators")]
    NotFound,
    #[error("instance too large for exact evaluation: {0}")]
    TooLarge(String),
    #[error("Hamiltonian terms do not generate the code's cycle group")]
    TermsMismatch,

    #[error("vertex {vertex} is not 4-valent (slot {slot} unused)")]
    NotFourValent { vertex: usize, slot: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("half-edge ({vertex},{slot}) used more than once or out of range")]
    SlotReused { vertex: usize, slot: usize },
    #[error("edge set is not a cycle")]
    NotACycle,
    #[error("edge set is not even")]
    NotEven,

    #[error("stabilizer generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("stabilizer group contains -I")]
    MinusIdentity,
    #[error("cycle-to-Pauli kernel is not {{0, E}}: {0}")]
    KernelViolation(String),
    #[error("no pairing convention reproduces the target group")]
    NoConventionFound,
    #[error("invalid Pauli string: {0}")]
    BadPauli(String),

    #[error("generators do not generate the group")]
    NotGenerating,
    #[error("a marked generator is the identity")]
    IdentityGenerator,
    #[error("relator {0:?} does not evaluate to the identity")]
    NotARelator(String),
    #[error("invalid group specification: {0}")]
    BadGroup(String),
    #[error("invalid word {0:?}: {1}")]
    BadWord(String, String),
    #[error("LDPC bound violated: {0}")]
    BoundViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable process exit code for the error kind (see `graphqec --help`).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Io(_) => 3,
            Error::NotFourValent { .. } => 10,
            Error::NotConnected => 11,
            Error::SlotReused { .. } => 12,
            Error::NotACycle => 13,
            Error::NotEven => 14,
            Error::MixedLength { .. } => 20,
            Error::AmbientMismatch(..) => 21,
            Error::BudgetExceeded { .. } => 22,
            Error::NotFound => 23,
            Error::TooLarge(_) => 24,
            Error::TermsMismatch => 25,
            Error::NonCommuting(..) => 30,
            Error::MinusIdentity => 31,
            Error::KernelViolation(_) => 32,
            Error::NoConventionFound => 33,
            Error::BadPauli(_) => 34,
            Error::NotGenerating => 40,
            Error::IdentityGenerator => 41,
            Error::NotARelator(_) => 42,
            Error::BadGroup(_) => 43,
            Error::BadWord(..) => 44,
            Error::BoundViolated(_) => 45,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
