//! Exact coefficient substrate: rationals, dense univariate polynomials,
//! sparse bivariate polynomials in `x` and `q`, and reduced rational functions.
//!
//! Nothing in here touches floating point.

mod bipoly;
mod modgcd;
mod ratfunc;
mod squarefree;
mod unipoly;

pub use bipoly::{bipoly_eps_expand, bipoly_eval_q1, BiPoly};
pub use num_rational::BigRational;
pub use ratfunc::{ratfunc_normalize, RatFunc};
pub use squarefree::{is_squarefree, rational_sqrt, squarefree_decompose};
pub use unipoly::UniPoly;

pub(crate) use unipoly::{power_string, write_terms};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `p / q` as a reduced rational; panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// Formal `d/dx`.
pub fn unipoly_derivative(p: &UniPoly) -> UniPoly {
    p.derivative()
}
