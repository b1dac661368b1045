use serde::Serialize;
use thiserror::Error;

use crate::scalars::Field;

use super::matrix::ExactMatrix;

/// Default cutoff for the order of a single matrix.
pub const DEFAULT_ORDER_CUTOFF: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderOutcome {
    Order(u64),
    Exceeded(u64),
}

impl OrderOutcome {
    pub fn order(self) -> Option<u64> {
        match self {
            OrderOutcome::Order(n) => Some(n),
            OrderOutcome::Exceeded(_) => None,
        }
    }

    /// True when the order is known and divides `k`.
    pub fn divides(self, k: u64) -> bool {
        self.order().is_some_and(|n| k % n == 0)
    }
}

impl std::fmt::Display for OrderOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderOutcome::Order(n) => write!(f, "{n}"),
            OrderOutcome::Exceeded(c) => write!(f, "exceeded({c})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
}

/// Least `k <= cutoff` with `m^k = I`.
pub fn element_order<T: Field>(m: &ExactMatrix<T>, cutoff: u64) -> Result<OrderOutcome, LinalgError> {
    if m.rank() < m.dim() {
        return Err(LinalgError::Singular);
    }
    let mut p = m.clone();
    for k in 1..=cutoff {
        if p.is_identity() {
            return Ok(OrderOutcome::Order(k));
        }
        p = p.mul(m);
    }
    Ok(OrderOutcome::Exceeded(cutoff))
}

/// Exact order given a known exponent `n` with `m^n = I`, found by stripping
/// prime factors of `n` with repeated squaring. `None` if `m^n != I`.
pub fn order_dividing<T: crate::scalars::Ring>(m: &ExactMatrix<T>, n: u64) -> Option<u64> {
    if n == 0 || !m.pow(n).is_identity() {
        return None;
    }
    let mut order = n;
    for p in prime_factors(n) {
        while order % p == 0 && m.pow(order / p).is_identity() {
            order /= p;
        }
    }
    Some(order)
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Rational};

    #[test]
    fn rotation_orders() {
        // companion matrix of x^2 + x + 1 has order 3
        let m: ExactMatrix<Rational> =
            ExactMatrix::from_rows(vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(1, 1), rat(-1, 1)]]);
        assert_eq!(element_order(&m, 100), Ok(OrderOutcome::Order(3)));
        assert_eq!(order_dividing(&m, 12), Some(3));
        assert_eq!(order_dividing(&m, 4), None);
        let id = ExactMatrix::identity(3, &rat(1, 1));
        assert_eq!(element_order(&id, 1), Ok(OrderOutcome::Order(1)));
    }

    #[test]
    fn unipotent_exceeds_and_singular_fails() {
        let m: ExactMatrix<Rational> =
            ExactMatrix::from_rows(vec![vec![rat(1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]]);
        assert_eq!(element_order(&m, 50), Ok(OrderOutcome::Exceeded(50)));
        let z = ExactMatrix::zero(2, &rat(1, 1));
        assert_eq!(element_order(&z, 5), Err(LinalgError::Singular));
    }
}
