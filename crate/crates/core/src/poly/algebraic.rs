use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{factor_rational, is_irreducible, sturm, IsolatingInterval, UniPoly};
use crate::scalars::{rat, NumberField, Rational, ScalarError};
use crate::scalars::rational::sign;

/// A real algebraic number: an irreducible minimal polynomial over Q plus an
/// interval isolating one of its real roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    minpoly: UniPoly<Rational>,
    interval: IsolatingInterval,
}

impl AlgebraicNumber {
    /// Certifies irreducibility and that the interval isolates a single root.
    pub fn new(minpoly: UniPoly<Rational>, interval: IsolatingInterval) -> Result<Self, ScalarError> {
        let minpoly = minpoly.monic();
        if !is_irreducible(&minpoly) {
            return Err(ScalarError::ReducibleModulus(minpoly.to_string()));
        }
        let lo = minpoly.eval(&interval.lower);
        let hi = minpoly.eval(&interval.upper);
        if interval.lower >= interval.upper
            || lo.is_zero()
            || hi.is_zero()
            || sturm::count_roots_between(&minpoly, &interval.lower, &interval.upper) != 1
        {
            return Err(ScalarError::Parse {
                what: "isolating interval",
                input: format!("({}, {}) for {}", interval.lower, interval.upper, minpoly),
            });
        }
        Ok(AlgebraicNumber { minpoly, interval })
    }

    pub fn rational(q: &Rational) -> Self {
        let minpoly = UniPoly::new(vec![-q.clone(), rat(1, 1)]);
        let eps = rat(1, 1_000_000);
        let interval = IsolatingInterval { lower: q - &eps, upper: q + &eps };
        AlgebraicNumber { minpoly, interval }
    }

    /// All real roots of `f`, each with its own irreducible minimal polynomial,
    /// in increasing order.
    pub fn real_roots(f: &UniPoly<Rational>) -> Vec<AlgebraicNumber> {
        let mut out = Vec::new();
        for (g, _) in factor_rational(f) {
            for iv in sturm::sturm_isolate(&g) {
                out.push(AlgebraicNumber { minpoly: g.clone(), interval: iv });
            }
        }
        out.sort_by(|a, b| a.cmp_value(b));
        out
    }

    pub fn minpoly(&self) -> &UniPoly<Rational> {
        &self.minpoly
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.degree() == 1).then(|| -&self.minpoly.coeffs()[0])
    }

    pub fn number_field(&self) -> Arc<NumberField> {
        Arc::new(NumberField::new(self.minpoly.clone()).expect("minimal polynomial is irreducible"))
    }

    /// Narrows the interval to width below `w`.
    pub fn refined(&self, w: &Rational) -> AlgebraicNumber {
        if self.degree() == 1 {
            return self.clone();
        }
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            interval: sturm::refine(&self.minpoly, self.interval.clone(), w),
        }
    }

    /// Orders two real algebraic numbers exactly.
    pub fn cmp_value(&self, other: &AlgebraicNumber) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        if self.minpoly == other.minpoly {
            // both intervals isolate a root of the same polynomial, so the
            // roots coincide iff the overlap contains a root
            let lo = (&self.interval.lower).max(&other.interval.lower).clone();
            let hi = (&self.interval.upper).min(&other.interval.upper).clone();
            if lo < hi && sturm::count_roots_between(&self.minpoly, &lo, &hi) == 1 {
                return Ordering::Equal;
            }
        }
        let mut x = self.clone();
        let mut y = other.clone();
        let mut w = rat(1, 1000);
        loop {
            if x.interval.upper <= y.interval.lower {
                return Ordering::Less;
            }
            if y.interval.upper <= x.interval.lower {
                return Ordering::Greater;
            }
            w = w / rat(1000, 1);
            x = x.refined(&w);
            y = y.refined(&w);
        }
    }

    /// Is `q` exactly this number?
    pub fn equals_rational(&self, q: &Rational) -> bool {
        self.as_rational().as_ref() == Some(q)
    }

    /// Decimal approximation with `digits` digits after the point, computed
    /// exactly from a refined interval.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits);
        let w = Rational::new(1.into(), scale.clone() * 10);
        let r = self.refined(&w);
        let mid = match self.as_rational() {
            Some(q) => q,
            None => (&r.interval.lower + &r.interval.upper) / rat(2, 1),
        };
        let scaled = (mid * Rational::from_integer(scale.clone())).round().to_integer();
        let neg = scaled.is_negative();
        let a = scaled.abs();
        let int = &a / &scale;
        let frac = &a % &scale;
        let s = format!("{}.{:0>width$}", int, frac.to_string(), width = digits as usize);
        if neg {
            format!("-{s}")
        } else {
            s
        }
    }

    /// Sign of `f` at this number, decided by refinement.
    pub fn sign_of(&self, f: &UniPoly<Rational>) -> i32 {
        let g = f.rem(&self.minpoly).unwrap();
        if g.is_zero() {
            return 0;
        }
        let mut w = rat(1, 1000);
        loop {
            let r = self.refined(&w);
            // g has no root of the minimal polynomial, so once the interval
            // avoids roots of g the sign is constant on it
            if sturm::count_roots_between(&g, &r.interval.lower, &r.interval.upper) == 0
                && !g.eval(&r.interval.upper).is_zero()
            {
                return sign(&g.eval(&r.interval.upper));
            }
            w = w / rat(1000, 1);
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.minpoly, self.interval.lower, self.interval.upper
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UniPoly<Rational> {
        s.parse().unwrap()
    }

    #[test]
    fn roots_of_product() {
        let f = p("x^2 - 5").mul(&p("x - 1/4"));
        let roots = AlgebraicNumber::real_roots(&f);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1].as_rational(), Some(rat(1, 4)));
        assert_eq!(roots[0].to_decimal(6), "-2.236068");
        for r in &roots {
            let lo = r.minpoly().eval(&r.interval().lower);
            let hi = r.minpoly().eval(&r.interval().upper);
            assert!(sign(&lo) * sign(&hi) < 0);
        }
    }

    #[test]
    fn rejects_reducible_minpoly() {
        let iv = IsolatingInterval { lower: rat(1, 1), upper: rat(3, 1) };
        assert!(AlgebraicNumber::new(p("x^2 - 4"), iv).is_err());
    }

    #[test]
    fn sign_at_sqrt2() {
        let r = AlgebraicNumber::real_roots(&p("x^2 - 2")).pop().unwrap();
        assert_eq!(r.sign_of(&p("x - 1")), 1);
        assert_eq!(r.sign_of(&p("x - 3/2")), -1);
        assert_eq!(r.sign_of(&p("x^2 - 2")), 0);
    }
}
