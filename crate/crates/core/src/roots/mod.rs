//! Parameter values that force a prescribed order on a product of Miyamoto
//! involutions: gcd of the entries of `M^k - I`, factored over Q, with every
//! factor verified exactly in its number field.

mod tables;

pub use tables::{finite_field_orders, Prop1Row, RadicalValue, F11_ORDERS, F7_ORDERS, PROP1_ROWS};

use serde::Serialize;

use crate::algebra::{universal, AlgebraError};
use crate::linalg::{ExactMatrix, OrderOutcome};
use crate::poly::{factor_rational, is_irreducible, univariate_gcd_all, AlgebraicNumber, Param, ParamPoly, UniPoly};
use crate::scalars::{rat, Rational};

/// Default bound on the target order for gcd solving.
pub const DEFAULT_MAX_ORDER: u64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootsError {
    #[error("minimal polynomial {0} is reducible over Q")]
    ReducibleMinpoly(String),
    #[error("entries of the word are not univariate in {0}")]
    NotUnivariate(&'static str),
    #[error("M^k = I holds identically; no condition on {0}")]
    Identically(&'static str),
    #[error("target order {0} outside 1..={1}")]
    OrderOutOfRange(u64, u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which product of involutions an order refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TauWord {
    /// `tau_a tau_b` on the 2-generated subalgebra with basis a, b, ab.
    TwoGenerated,
    /// `tau_a tau_b` on the universal algebra.
    UniversalAB,
    /// `tau_a tau_b^{tau_c} = tau_a tau_c tau_b tau_c` on the universal algebra.
    ConjugateProduct,
}

impl TauWord {
    /// The word as a matrix over the parameter ring with some parameters fixed.
    pub fn matrix(self, fixed: &[Option<Rational>; 4]) -> Result<ExactMatrix<ParamPoly>, AlgebraError> {
        let t = universal().substitute(fixed);
        Ok(match self {
            TauWord::TwoGenerated => {
                let s = t.subtable(&[0, 1, 3])?;
                s.miyamoto_basis(0)?.mul(&s.miyamoto_basis(1)?)
            }
            TauWord::UniversalAB => t.miyamoto_basis(0)?.mul(&t.miyamoto_basis(1)?),
            TauWord::ConjugateProduct => {
                let tc = t.miyamoto_basis(2)?;
                t.miyamoto_basis(0)?.mul(&tc).mul(&t.miyamoto_basis(1)?).mul(&tc)
            }
        })
    }
}

impl std::str::FromStr for TauWord {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ab2" | "two-generated" => Ok(TauWord::TwoGenerated),
            "ab" => Ok(TauWord::UniversalAB),
            "abc" | "ab^c" => Ok(TauWord::ConjugateProduct),
            _ => Err(format!("unknown word {s:?} (expected ab2, ab or abc)")),
        }
    }
}

/// One real parameter value with its exactly verified order.
#[derive(Debug, Clone)]
pub struct OrderCandidate {
    pub value: AlgebraicNumber,
    pub order: OrderOutcome,
}

impl OrderCandidate {
    /// True if the verified order equals the target rather than dividing it.
    pub fn is_exact(&self, k: u64) -> bool {
        self.order == OrderOutcome::Order(k)
    }
}

#[derive(Debug, Clone)]
pub struct OrderSolution {
    pub k: u64,
    pub word: TauWord,
    pub param: Param,
    /// Monic gcd of the entries of `M^k - I`.
    pub gcd: UniPoly<Rational>,
    /// Irreducible factors of the gcd with the order verified in `Q[t]/(f)`.
    pub factors: Vec<(UniPoly<Rational>, OrderOutcome)>,
    /// Real roots of the factors, in increasing order.
    pub candidates: Vec<OrderCandidate>,
}

/// Flat record for CSV/JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateRow {
    pub target: u64,
    pub minpoly: String,
    pub lower: String,
    pub upper: String,
    pub approx: String,
    pub verified_order: String,
}

impl OrderSolution {
    pub fn rows(&self) -> Vec<CandidateRow> {
        let var = self.param.name();
        self.candidates
            .iter()
            .map(|c| CandidateRow {
                target: self.k,
                minpoly: c.value.minpoly().to_string_var(var),
                lower: c.value.interval().lower.to_string(),
                upper: c.value.interval().upper.to_string(),
                approx: c.value.to_decimal(8),
                verified_order: c.order.to_string(),
            })
            .collect()
    }

    /// Candidates whose order is exactly `k`.
    pub fn exact(&self) -> impl Iterator<Item = &OrderCandidate> {
        self.candidates.iter().filter(|c| c.is_exact(self.k))
    }
}

/// Order of `word` with `param` set to a root of the irreducible `minpoly`,
/// computed in `Q[t]/(minpoly)` and hence valid for every root. Parameters
/// neither fixed nor equal to `param` stay symbolic.
pub fn verify_order_at(
    minpoly: &UniPoly<Rational>,
    param: Param,
    word: TauWord,
    fixed: &[Option<Rational>; 4],
    cutoff: u64,
) -> Result<OrderOutcome, RootsError> {
    if !is_irreducible(minpoly) {
        return Err(RootsError::ReducibleMinpoly(minpoly.to_string_var(param.name())));
    }
    let m = minpoly.monic();
    let reduce = |x: &ExactMatrix<ParamPoly>| x.map(|e| e.reduce_mod(param, &m));
    let base = reduce(&word.matrix(fixed)?);
    let mut power = base.clone();
    for k in 1..=cutoff {
        if power.is_identity() {
            return Ok(OrderOutcome::Order(k));
        }
        power = reduce(&power.mul(&base));
    }
    Ok(OrderOutcome::Exceeded(cutoff))
}

/// Values of `param` making `word^k = I`, with the other parameters fixed.
pub fn solve_order(
    word: TauWord,
    param: Param,
    fixed: &[Option<Rational>; 4],
    k: u64,
) -> Result<OrderSolution, RootsError> {
    if k == 0 || k > DEFAULT_MAX_ORDER {
        return Err(RootsError::OrderOutOfRange(k, DEFAULT_MAX_ORDER));
    }
    let m = word.matrix(fixed)?;
    let t = m.pow(k).sub(&ExactMatrix::identity(m.dim(), &ParamPoly::one()));
    let gcd = univariate_gcd_all(t.entries().iter().cloned(), param).ok_or(RootsError::NotUnivariate(param.name()))?;
    if gcd.is_zero() {
        return Err(RootsError::Identically(param.name()));
    }
    let mut factors = Vec::new();
    let mut candidates = Vec::new();
    for (f, _) in factor_rational(&gcd) {
        let order = verify_order_at(&f, param, word, fixed, k)?;
        for value in AlgebraicNumber::real_roots(&f) {
            candidates.push(OrderCandidate { value, order });
        }
        factors.push((f, order));
    }
    candidates.sort_by(|a, b| a.value.cmp_value(&b.value));
    Ok(OrderSolution { k, word, param, gcd, factors, candidates })
}

/// Values of alpha giving `|tau_a tau_b| | k` in the 2-generated algebra.
pub fn solve_order_2gen(k: u64) -> Result<OrderSolution, RootsError> {
    solve_order(TauWord::TwoGenerated, Param::Alpha, &[None, None, None, None], k)
}

/// Values of psi giving `|tau_a tau_b^{tau_c}| | k` with
/// `alpha = beta = gamma = angle`.
pub fn solve_order_3gen_conjugate(k: u64, angle: &Rational) -> Result<OrderSolution, RootsError> {
    let v = Some(angle.clone());
    solve_order(TauWord::ConjugateProduct, Param::Psi, &[v.clone(), v.clone(), v, None], k)
}

/// The default common angle for the conjugate-product solver.
pub fn default_angle() -> Rational {
    rat(-1, 8)
}

#[cfg(test)]
mod tests;
