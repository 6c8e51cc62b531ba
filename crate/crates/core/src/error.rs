use crate::fiber::Monoid;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by semigroup, fiber, construction, and presentation operations.
///
/// Every variant carries enough data to reconstruct what was rejected; the
/// short code returned by [`Error::code`] is stable and machine-parsable.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive")]
    ZeroGenerator,

    #[error("generators have gcd {gcd}, so the complement would be infinite")]
    NotCoprime { gcd: u64 },

    #[error("operation is undefined for the full semigroup of naturals")]
    IsN,

    #[error("{value} is not a nonzero element of the semigroup")]
    NotAMember { value: u64 },

    #[error("{d} is not a valid quotient divisor here (need d >= 2)")]
    InvalidD { d: u64 },

    #[error("the monoid generated by the set reaches {target}, which is d times a gap of delta")]
    NotAnMdSet { target: u64 },

    #[error("quotient by d is not delta (got {})", actual.display_msg())]
    WrongQuotient { actual: Box<Monoid> },

    #[error("the monoid has no element outside d*delta")]
    IsDDelta,

    #[error("a = {a} is invalid: need a nonzero a with both a and a+1 in delta")]
    InvalidA { a: u64 },

    #[error("base {base} must be a nonzero element of the semigroup divisible by {divisor}")]
    BadBase { base: u64, divisor: u64 },

    #[error("target embedding dimension {target} is below e(delta) = {minimum}")]
    BadTarget { target: usize, minimum: usize },

    #[error("x = {x} does not lie in delta")]
    NotInDelta { x: u64 },

    #[error("x = {x} lies in d*delta")]
    InDDelta { x: u64 },

    #[error("bad gluing: {reason}")]
    BadGluing { reason: &'static str },

    #[error("exponent vector evaluates to {value}, expected {expected}")]
    BadFactorization { value: u64, expected: u64 },

    #[error("presentation generators do not match the minimal generators of the semigroup")]
    GeneratorMismatch,

    #[error("relation sides evaluate to different elements ({lhs} vs {rhs})")]
    UnbalancedRelation { lhs: u64, rhs: u64 },

    #[error("relation pairs a factorization with itself")]
    SelfPairedRelation,

    #[error("oracle snapshot bound {bound} is too small, need at least {needed}")]
    BoundTooSmall { bound: u64, needed: u64 },

    #[error("integer overflow during exact arithmetic")]
    Overflow,

    #[error("cannot parse {text:?} as a comma-separated list of positive integers")]
    Parse { text: String },
}

impl Error {
    /// Stable machine-readable code, used by the CLI error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "empty_generators",
            Error::ZeroGenerator => "zero_generator",
            Error::NotCoprime { .. } => "not_coprime",
            Error::IsN => "is_n",
            Error::NotAMember { .. } => "not_a_member",
            Error::InvalidD { .. } => "invalid_d",
            Error::NotAnMdSet { .. } => "not_an_md_set",
            Error::WrongQuotient { .. } => "wrong_quotient",
            Error::IsDDelta => "is_d_delta",
            Error::InvalidA { .. } => "invalid_a",
            Error::BadBase { .. } => "bad_base",
            Error::BadTarget { .. } => "bad_target",
            Error::NotInDelta { .. } => "not_in_delta",
            Error::InDDelta { .. } => "in_d_delta",
            Error::BadGluing { .. } => "bad_gluing",
            Error::BadFactorization { .. } => "bad_factorization",
            Error::GeneratorMismatch => "generator_mismatch",
            Error::UnbalancedRelation { .. } => "unbalanced_relation",
            Error::SelfPairedRelation => "self_paired_relation",
            Error::BoundTooSmall { .. } => "bound_too_small",
            Error::Overflow => "overflow",
            Error::Parse { .. } => "parse_error",
        }
    }
}

pub(crate) fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}
