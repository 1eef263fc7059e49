use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring must have at least {min} variables, got {got}")]
    TooFewVariables { min: usize, got: usize },
    #[error("ring may have at most {max} variables, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("negative exponent {value} at x{index}")]
    NegativeExponent { index: usize, value: i64 },
    #[error("monomials live in rings with {left} and {right} variables")]
    ContextMismatch { left: usize, right: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("split index l={l} outside 2..={max}")]
    InvalidSplit { l: usize, max: usize },
    #[error("the identity monomial has empty support")]
    EmptySupport,
    #[error("{0} has no variable of index greater than {1}")]
    NoTildeSupport(Monomial, usize),
    #[error("lexsegment endpoints out of order: {u} <_lex {v}")]
    EndpointsOutOfOrder { u: Monomial, v: Monomial },
    #[error("x1 does not divide u = {0}")]
    NotDivisibleByX1(Monomial),
    #[error("spec is not normalized: x1 must divide u and must not divide v")]
    NotNormalized,
    #[error("lexsegment spec is not of the linear-quotient form u = x1*x_(l+1)^a..x_n^a, v = x_l*x_n^(d-1)")]
    Unclassified,
    #[error("set of monomials mixes degrees {0} and {1}")]
    MixedDegrees(u32, u32),
    #[error("empty set of monomials")]
    EmptySet,
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded { what: &'static str, needed: u128, limit: u128 },
    #[error("power k must be at least 1")]
    ZeroPower,
    #[error("{0} is not a minimal generator of the power ideal")]
    NotAGenerator(Monomial),
    #[error("generator {0} has bar degree below k")]
    BarDegreeBound(Monomial),
    #[error("{0} does not lie in the ideal")]
    NotInIdeal(Monomial),
    #[error("x{s} is not in set of generator #{gen}")]
    NotInSet { gen: usize, s: usize },
    #[error(
        "ideal does not have linear quotients (fails at generator index {index} (0-based), colon generator {witness})"
    )]
    NotLinearQuotients { index: usize, witness: Monomial },
    #[error("decomposition function is not regular: x{t} in set(g(x{s}*m#{gen})) but not in set(m#{gen})")]
    NotRegular { gen: usize, s: usize, t: usize },
    #[error("closed-form decomposition gives {closed}, oracle gives {oracle} for x{s}*m#{gen}")]
    ClosedFormMismatch { gen: usize, s: usize, closed: Monomial, oracle: Monomial },
    #[error("closed-form decomposition value {0} is not a generator")]
    ClosedFormNotGenerator(Monomial),
    #[error("cannot parse monomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("malformed resolution document: {0}")]
    Import(String),
}

pub type Result<T> = std::result::Result<T, Error>;
