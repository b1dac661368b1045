use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use super::{parse_rational, Field, Fp, NfElem, NumberField, Rational, Ring, ScalarError};

/// Descriptor of a scalar domain, parsed from `Q`, `Fp:5` or `NF:t^2-5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    Rationals,
    PrimeField(u64),
    NumberField(Arc<NumberField>),
}

impl Domain {
    pub fn embed(&self, q: &Rational) -> Result<Scalar, ScalarError> {
        Ok(match self {
            Domain::Rationals => Scalar::Q(q.clone()),
            Domain::PrimeField(p) => Scalar::Fp(Fp::from_rational(q, *p)?),
            Domain::NumberField(k) => Scalar::Nf(k.from_rational(q)),
        })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Parses a value of this domain: a rational literal, or for number
    /// fields a bracketed coordinate vector such as `[1/16,-3/16]`.
    pub fn parse_value(&self, s: &str) -> Result<Scalar, ScalarError> {
        let s = s.trim();
        match self {
            Domain::NumberField(k) if s.starts_with('[') => {
                let inner = s
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| ScalarError::Parse { what: "coordinate vector", input: s.into() })?;
                let coords = inner
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Scalar::Nf(k.element(&coords)?))
            }
            _ => self.embed(&parse_rational(s)?),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.embed(&Rational::from_integer(0.into())).unwrap()
    }

    pub fn one(&self) -> Scalar {
        self.embed(&Rational::from_integer(1.into())).unwrap()
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Domain::Rationals, Scalar::Q(_)) => true,
            (Domain::PrimeField(p), Scalar::Fp(a)) => a.modulus() == *p,
            (Domain::NumberField(k), Scalar::Nf(a)) => **a.field() == **k,
            _ => false,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => f.write_str("Q"),
            Domain::PrimeField(p) => write!(f, "Fp:{p}"),
            Domain::NumberField(k) => write!(f, "NF:{}", k.modulus().to_string_var("t")),
        }
    }
}

impl FromStr for Domain {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Domain::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse { what: "prime", input: p.into() })?;
            if !super::is_prime_u64(p) {
                return Err(ScalarError::NotPrime(p));
            }
            return Ok(Domain::PrimeField(p));
        }
        if let Some(f) = s.strip_prefix("NF:") {
            return Ok(Domain::NumberField(Arc::new(NumberField::parse(f)?)));
        }
        Err(ScalarError::Parse { what: "domain (Q, Fp:p or NF:f(t))", input: s.into() })
    }
}

/// A scalar from any supported domain, used where the domain is only known
/// at run time (command line, sweeps).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp(Fp),
    Nf(NfElem),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Q(_) => Domain::Rationals,
            Scalar::Fp(a) => Domain::PrimeField(a.modulus()),
            Scalar::Nf(a) => Domain::NumberField(a.field().clone()),
        }
    }

    /// Errors unless both scalars live in the same domain.
    pub fn check_same_domain(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(ScalarError::MixedDomains(self.domain().to_string(), other.domain().to_string()))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(a) => write!(f, "{a}"),
            Scalar::Fp(a) => write!(f, "{a}"),
            Scalar::Nf(a) => write!(f, "{a}"),
        }
    }
}

macro_rules! binop {
    ($self:ident, $rhs:ident, $op:ident) => {
        match ($self, $rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.$op(b)),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.$op(b)),
            (Scalar::Nf(a), Scalar::Nf(b)) => Scalar::Nf(a.$op(b)),
            (a, b) => panic!("mixed scalar domains: {} and {}", a.domain(), b.domain()),
        }
    };
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        match self {
            Scalar::Q(a) => Scalar::Q(a.zero_like()),
            Scalar::Fp(a) => Scalar::Fp(a.zero_like()),
            Scalar::Nf(a) => Scalar::Nf(a.zero_like()),
        }
    }
    fn one_like(&self) -> Self {
        match self {
            Scalar::Q(a) => Scalar::Q(a.one_like()),
            Scalar::Fp(a) => Scalar::Fp(a.one_like()),
            Scalar::Nf(a) => Scalar::Nf(a.one_like()),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(a) => Ring::is_zero(a),
            Scalar::Fp(a) => a.is_zero(),
            Scalar::Nf(a) => a.is_zero(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        binop!(self, rhs, add)
    }
    fn sub(&self, rhs: &Self) -> Self {
        binop!(self, rhs, sub)
    }
    fn mul(&self, rhs: &Self) -> Self {
        binop!(self, rhs, mul)
    }
    fn neg(&self) -> Self {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
            Scalar::Nf(a) => Scalar::Nf(a.neg()),
        }
    }
    fn embed_rational(&self, q: &Rational) -> Result<Self, ScalarError> {
        self.domain().embed(q)
    }
}

impl Field for Scalar {
    fn inv(&self) -> Result<Self, ScalarError> {
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.inv()?),
            Scalar::Fp(a) => Scalar::Fp(a.inv()?),
            Scalar::Nf(a) => Scalar::Nf(a.inv()?),
        })
    }
    fn characteristic(&self) -> u64 {
        match self {
            Scalar::Fp(a) => a.modulus(),
            _ => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn parse_domains() {
        assert_eq!("Q".parse::<Domain>().unwrap(), Domain::Rationals);
        assert_eq!("Fp:5".parse::<Domain>().unwrap(), Domain::PrimeField(5));
        assert!(matches!("Fp:6".parse::<Domain>(), Err(ScalarError::NotPrime(6))));
        let d: Domain = "NF:t^2-5".parse().unwrap();
        assert_eq!(d.to_string(), "NF:t^2 - 5");
        let v = d.parse_value("[1/16,-3/16]").unwrap();
        assert!(d.contains(&v));
        assert!("R".parse::<Domain>().is_err());
    }

    #[test]
    fn mixed_domains_detected() {
        let a = Domain::Rationals.embed(&rat(1, 2)).unwrap();
        let b = Domain::PrimeField(5).embed(&rat(1, 2)).unwrap();
        assert!(matches!(a.check_same_domain(&b), Err(ScalarError::MixedDomains(..))));
    }
}
