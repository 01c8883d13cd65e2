use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in the group machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two permutations (or a permutation and a group) act on different point sets.
    DegreeMismatch { expected: usize, found: usize },
    /// An image table that is not a bijection of `{1..n}`.
    NotBijection,
    /// Degree zero was requested.
    EmptyDegree,
    /// Cycle notation could not be parsed.
    CycleSyntax { position: usize, message: String },
    /// A word could not be parsed.
    WordSyntax { position: usize, message: String },
    /// Leaves of a word are not `x1, x2, ..., xt` read left to right.
    VariableOrder { expected: usize, found: usize },
    /// A word was evaluated on the wrong number of arguments.
    Arity { expected: usize, found: usize },
    /// A group grew beyond the configured order cap.
    OrderCap { cap: usize },
    /// Commutator pair enumeration would exceed the configured pair cap.
    PairCap { pairs: usize, cap: usize },
    /// Automorphism enumeration requested for a group above the cap.
    AutCap { order: usize, cap: usize },
    /// An element or subgroup is not contained in the ambient group.
    NotContained,
    /// A subgroup that must be normal is not.
    NotNormal,
    /// Index out of range (word slot, lemma multiplicity, ...).
    BadArgument(String),
    /// Unknown catalog name.
    UnknownGroup(String),
    /// The subgroup does not satisfy the law, so the construction does not apply.
    HypothesisFailed,
    /// An internal consistency check failed. Always a bug.
    Invariant(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotBijection => f.write_str("image table is not a bijection"),
            Error::EmptyDegree => f.write_str("degree must be positive"),
            Error::CycleSyntax { position, message } => {
                write!(f, "cycle notation error at {position}: {message}")
            }
            Error::WordSyntax { position, message } => {
                write!(f, "word syntax error at {position}: {message}")
            }
            Error::VariableOrder { expected, found } => write!(
                f,
                "variables must read x1, x2, ... left to right: expected x{expected}, found x{found}"
            ),
            Error::Arity { expected, found } => {
                write!(f, "word takes {expected} arguments, got {found}")
            }
            Error::OrderCap { cap } => write!(f, "group order exceeds cap of {cap} elements"),
            Error::PairCap { pairs, cap } => {
                write!(f, "{pairs} commutator pairs exceed cap of {cap}")
            }
            Error::AutCap { order, cap } => {
                write!(f, "group of order {order} exceeds automorphism search cap of {cap}")
            }
            Error::NotContained => f.write_str("not contained in the ambient group"),
            Error::NotNormal => f.write_str("subgroup is not normal in the ambient group"),
            Error::BadArgument(msg) => write!(f, "bad argument: {msg}"),
            Error::UnknownGroup(name) => write!(f, "unknown group name `{name}`"),
            Error::HypothesisFailed => {
                f.write_str("the subgroup does not satisfy the commutator law")
            }
            Error::Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
