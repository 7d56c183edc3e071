//! An exact engine for the combinatorial theory of short two-player games:
//! construction and comparison in a hash-consed arena, canonical forms,
//! surreal-number recognition and arithmetic on dyadic values, stops and
//! infinitesimal classification, Sprague-Grundy theory, and a text grammar
//! for game expressions.
//!
//! Everything lives in an [`Arena`]: games are interned nodes addressed by
//! [`GameId`], structural identity is handle equality, and recursive
//! queries (order, canonical form, Grundy values, ...) are memoized on
//! handles.
//!
//! ```
//! use cgt_core::{Arena, Comparison};
//!
//! let mut arena = Arena::new();
//! let star = arena.star();
//! let sum = arena.add(star, star);
//! assert_eq!(arena.compare(sum, arena.zero()), Comparison::Equal);
//! assert_eq!(arena.render(sum), "0");
//! ```

pub mod analysis;
pub mod arena;
pub mod canonical;
pub mod dyadic;
pub mod error;
pub mod games;
pub mod impartial;
pub mod numbers;
pub mod parser;
pub mod random;

pub use num_rational::BigRational;

pub use analysis::Stops;
pub use arena::{Arena, GameId, GameNode};
pub use dyadic::{simplest_dyadic_between, Dyadic};
pub use error::Error;
pub use games::{Comparison, OutcomeClass};
pub use impartial::{mex, nim_sum, nim_winning_move, Nimber};
pub use numbers::InverseApproximation;
pub use parser::{parse, parse_prefix, EvalError, Expr, ParseError};
