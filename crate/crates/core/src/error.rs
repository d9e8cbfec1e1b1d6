use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolynomialDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("squarefree decomposition of the zero polynomial")]
    SquarefreeOfZero,

    #[error("square root of the zero polynomial")]
    DegenerateRoot,

    #[error("elements live over different radicands: sqrt({0}) vs sqrt({1})")]
    DeltaMismatch(String, String),

    #[error("element not analytic at 0")]
    NotAnalytic,

    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series square root needs a constant term that is the square of a nonzero rational, got {0}")]
    NotASquare(String),

    #[error("cannot select branch by iteration: {0}")]
    NoContraction(String),

    #[error("no analytic branch: {0}")]
    NoAnalyticBranch(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("only unit-width steps supported")]
    NonUnitStep,

    #[error("step set must not be empty")]
    EmptyStepSet,

    #[error("half-integer exponent q^({0}/2) in a closed-path enumerator")]
    HalfIntegerExponent(u64),

    #[error("brute force over {0} step sequences exceeds the 10^7 limit; use the dynamic program instead")]
    BruteForceLimit(String),

    #[error("power must be at least 1; use F[0] directly for the path counts")]
    ZeroPower,

    #[error("derivation only carries F[0..={have}], order {need} is required")]
    InsufficientOrder { have: usize, need: usize },

    #[error("growth estimate needs at least 10 terms, got {0}")]
    TooFewTerms(usize),

    #[error("growth estimate needs strictly positive values (index {0})")]
    NonPositive(usize),

    #[error("{0}")]
    InvalidInput(String),

    #[error("network access disabled: {0}")]
    Offline(String),

    #[error("OEIS request failed: {0}")]
    Http(String),
}

pub type Result<T> = std::result::Result<T, Error>;
