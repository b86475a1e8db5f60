//! Exact scalars and dense univariate polynomials over the integers and rationals.

mod poly;
mod scalar;

pub use poly::{IntPoly, Poly, RatPoly};
pub use scalar::{
    binomial, exact_div, expect_integer, format_rat, int, parse_rat, rat, rat_from_int, simplest_rational_between, Int,
    Rat,
};
