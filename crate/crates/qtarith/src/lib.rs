//! Exact arithmetic in `Z[q,t]` and `Q(q,t)`.
//!
//! Polynomials are sparse and kept in a canonical order (total degree, then
//! higher `q` power first), so equal values have equal representations and
//! printing is deterministic. Rational functions are reduced by a gcd over
//! `Z[q][t]` after every operation.

mod error;
mod parse;
mod poly;
mod qanalog;
mod rational;
mod upoly;

pub use error::QtError;
pub use parse::{parse_poly, parse_rational};
pub use poly::{Monomial, QTPoly};
pub use qanalog::{q_comp_pochhammer, q_factorial, q_integer, q_pochhammer};
pub use rational::{rat_arith, QTRational, RatOp};
