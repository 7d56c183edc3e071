use crate::dyadic::Dyadic;

/// Domain errors reported by engine operations whose preconditions are
/// checked at runtime. Usage errors (handles from a different arena) panic
/// instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: Dyadic, hi: Dyadic },

    #[error("{side} option is not a gift horse for the target game")]
    NotAGiftHorse { side: &'static str },

    #[error("inverse iteration requires a game equal to a positive number")]
    NotAPositiveNumber,

    #[error("grundy value is only defined for impartial games")]
    NotImpartial,

    #[error("up-multiple bound requires an infinitesimal game")]
    NotInfinitesimal,

    #[error("number avoidance applies only to games that are not equal to a number")]
    NumberAvoidanceOnNumber,
}
