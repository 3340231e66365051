use std::fmt;

/// Errors shared across the crate. Operation contracts name the variants
/// they can produce; anything else reaching the caller is a bug.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus passed to a field constructor is not prime.
    NotPrime(u64),
    /// The defining polynomial has a root or a nontrivial factor over F_p.
    NotIrreducible,
    /// A polynomial or coefficient sequence has the wrong degree/length.
    DegreeMismatch { expected: usize, got: usize },
    /// Field parameters outside the supported desk-scale range.
    UnsupportedField { p: u64, r: u32 },
    /// The supplied elements are linearly dependent over F_p.
    NotABasis,
    /// A point or table has the wrong number of coordinates/entries.
    DimensionMismatch { expected: usize, got: usize },
    /// Two objects built over different field contexts were mixed.
    ContextMismatch,
    IndexOutOfRange { index: usize, len: usize },
    LengthMismatch { left: usize, right: usize },
    /// Gowers norm of order zero requested.
    OrderZero,
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { need: u128, budget: u64 },
    /// Weight-closure would produce more forms than the configured cap.
    ClosureBudgetExceeded { need: u128, cap: u64 },
    /// A joint-equidistribution target violates its annihilator conditions.
    InconsistentTarget,
    /// A composition-preservation check was invoked with deg/depth(Q_i)
    /// exceeding deg/depth(P_i).
    DegreeOrDepthViolation { index: usize },
    /// Refinement loop exceeded its iteration cap.
    NonTermination { iterations: u64 },
    /// An internal cross-check failed; parameters were too weak for the
    /// pipeline, never a silent wrong answer.
    InternalInconsistency(String),
    /// Text-format parse failure.
    Parse(String),
    /// Config-file or experiment-selection failure.
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotIrreducible => write!(f, "defining polynomial is reducible over F_p"),
            Error::DegreeMismatch { expected, got } => {
                write!(f, "degree mismatch: expected {expected}, got {got}")
            }
            Error::UnsupportedField { p, r } => {
                write!(f, "unsupported field parameters p={p}, r={r} (need p <= 7, 1 <= r <= 4)")
            }
            Error::NotABasis => write!(f, "elements are not linearly independent over F_p"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::ContextMismatch => write!(f, "objects belong to different field contexts"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::OrderZero => write!(f, "Gowers norm order must be >= 1"),
            Error::BudgetExceeded { need, budget } => {
                write!(f, "budget exceeded: need {need} evaluations, budget {budget}")
            }
            Error::ClosureBudgetExceeded { need, cap } => {
                write!(f, "weight closure needs {need} forms, cap {cap}")
            }
            Error::InconsistentTarget => {
                write!(f, "target tuple violates an annihilator condition")
            }
            Error::DegreeOrDepthViolation { index } => {
                write!(f, "replacement polynomial {index} exceeds degree or depth bound")
            }
            Error::NonTermination { iterations } => {
                write!(f, "refinement did not stabilize within {iterations} iterations")
            }
            Error::InternalInconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
