//! Exact scalar domains: rationals, prime fields and simple number fields.
//!
//! Every element carries whatever context it needs (the modulus of a prime
//! field, the defining polynomial of a number field), so generic code can
//! build zeros, ones and embedded constants from any sample element.

mod domain;
pub(crate) mod fp;
mod numfield;
pub(crate) mod rational;

pub use domain::{Domain, Scalar};
pub use fp::{is_prime_u64, Fp};
pub use numfield::{NfElem, NumberField};
pub use rational::{parse_rational, rat, Rational};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NonInvertible(String),
    #[error("{value} cannot be embedded in F_{modulus}")]
    NonEmbeddable { value: String, modulus: u64 },
    #[error("scalars from different domains: {0} and {1}")]
    MixedDomains(String, String),
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("cannot parse {what}: {input}")]
    Parse { what: &'static str, input: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("defining polynomial {0} is not irreducible over Q")]
    ReducibleModulus(String),
}

/// Commutative ring with unity whose elements carry their own context.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Image of `q` under the canonical map into the domain of `self`.
    fn embed_rational(&self, q: &Rational) -> Result<Self, ScalarError>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.embed_rational(&Rational::from_integer(n.into()))
            .expect("integers embed in every domain")
    }

    fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ScalarError>;

    fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Characteristic of the field (0 for characteristic zero).
    fn characteristic(&self) -> u64;
}

/// Generic entry point for inversion in any supported domain.
pub fn field_invert<F: Field>(x: &F) -> Result<F, ScalarError> {
    x.inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn invert_examples() {
        let three = Fp::new(3, 7).unwrap();
        assert_eq!(field_invert(&three).unwrap().value(), 5);
        assert_eq!(field_invert(&rat(1, 4)).unwrap(), rat(4, 1));
        let k = Arc::new(NumberField::parse("t^2-5").unwrap());
        let sqrt5 = k.generator();
        let inv = field_invert(&sqrt5).unwrap();
        assert_eq!(inv.coords(), &[rat(0, 1), rat(1, 5)]);
    }

    #[test]
    fn zero_is_not_invertible() {
        assert_eq!(rat(0, 1).inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Fp::new(0, 5).unwrap().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn embed_examples() {
        let f5 = Domain::PrimeField(5);
        let f7 = Domain::PrimeField(7);
        assert_eq!(f5.embed(&rat(1, 4)).unwrap(), Scalar::Fp(Fp::new(4, 5).unwrap()));
        assert_eq!(f5.embed(&rat(-1, 8)).unwrap(), Scalar::Fp(Fp::new(3, 5).unwrap()));
        assert_eq!(f7.embed(&rat(1, 4)).unwrap(), Scalar::Fp(Fp::new(2, 7).unwrap()));
        assert!(matches!(
            f5.embed(&rat(1, 10)),
            Err(ScalarError::NonEmbeddable { .. })
        ));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = rat(-3, 2);
        let mut acc = rat(1, 1);
        for k in 0..9u64 {
            assert_eq!(Ring::pow(&x, k), acc);
            acc = acc.mul(&x);
        }
    }
}
