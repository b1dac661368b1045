//! Univariate and parameter polynomials, real-root isolation and factoring.

mod algebraic;
mod factor;
mod mpoly;
pub(crate) mod parse;
mod ratfunc;
pub mod sturm;
mod unipoly;

pub use algebraic::AlgebraicNumber;
pub use factor::{factor_rational, is_irreducible, roots_mod_p, squarefree_decomposition};
pub use mpoly::{univariate_gcd_all, Param, ParamPoly, PARAM_NAMES};
pub use ratfunc::RatFunc;
pub use sturm::{sturm_isolate, IsolatingInterval};
pub use unipoly::{format_generic, UniPoly};

use crate::scalars::Rational;

/// Monic gcd of two rational polynomials.
pub fn uni_gcd(f: &UniPoly<Rational>, g: &UniPoly<Rational>) -> UniPoly<Rational> {
    f.gcd(g)
}
