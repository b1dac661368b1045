use std::fmt;

use super::UniPoly;
use crate::scalars::{Field, Rational, Ring, ScalarError};

/// Element of the rational function field Q(v) in one named variable,
/// kept as a reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
    var: &'static str,
}

impl RatFunc {
    pub fn new(num: UniPoly<Rational>, den: UniPoly<Rational>, var: &'static str) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: one_poly(), var });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let l = den.lead().unwrap().inv()?;
        Ok(RatFunc { num: num.scale(&l), den: den.scale(&l), var })
    }

    pub fn from_poly(num: UniPoly<Rational>, var: &'static str) -> Self {
        RatFunc { num, den: one_poly(), var }
    }

    pub fn numerator(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly<Rational> {
        &self.den
    }

    /// The polynomial if the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly<Rational>> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }
}

fn one_poly() -> UniPoly<Rational> {
    UniPoly::constant(Rational::from_integer(1.into()))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.to_string_var(self.var);
        if self.den.degree() == Some(0) {
            f.write_str(&n)
        } else {
            write!(f, "({n})/({})", self.den.to_string_var(self.var))
        }
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::from_poly(UniPoly::zero(), self.var)
    }
    fn one_like(&self) -> Self {
        RatFunc::from_poly(one_poly(), self.var)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::new(self.num.add(&rhs.num), self.den.clone(), self.var).unwrap();
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&rhs.den), self.var).unwrap()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den), self.var).unwrap()
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone(), var: self.var }
    }
    fn embed_rational(&self, q: &Rational) -> Result<Self, ScalarError> {
        Ok(RatFunc::from_poly(UniPoly::constant(q.clone()), self.var))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone(), self.var)
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_fractions() {
        let n: UniPoly<Rational> = "x^2 - 1".parse().unwrap();
        let d: UniPoly<Rational> = "2*x - 2".parse().unwrap();
        let r = RatFunc::new(n, d, "psi").unwrap();
        assert_eq!(r.to_string(), "1/2*psi + 1/2");
        let back = r.mul(&r.inv().unwrap());
        assert!(back.is_one());
    }
}
