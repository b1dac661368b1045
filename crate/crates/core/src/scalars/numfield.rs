use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;


use super::{Field, Rational, Ring, ScalarError};
use crate::poly::UniPoly;

/// Simple number field Q[t]/(f(t)) for a monic irreducible `f`.
///
/// No complex embedding is fixed: identities checked here hold for every
/// root of `f` simultaneously.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: UniPoly<Rational>,
}

impl NumberField {
    /// Builds the field after certifying that `f` is irreducible over Q.
    pub fn new(f: UniPoly<Rational>) -> Result<Self, ScalarError> {
        let f = f.monic();
        match f.degree() {
            None | Some(0) => return Err(ScalarError::ReducibleModulus(f.to_string_var("t"))),
            _ => {}
        }
        if !crate::poly::is_irreducible(&f) {
            return Err(ScalarError::ReducibleModulus(f.to_string_var("t")));
        }
        Ok(NumberField { modulus: f })
    }

    /// Parses the defining polynomial in the variable `t`, e.g. `t^2-5`.
    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        NumberField::new(UniPoly::parse_var(s, "t")?)
    }

    pub fn modulus(&self) -> &UniPoly<Rational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn generator(self: &Arc<Self>) -> NfElem {
        NfElem::from_poly(self, &UniPoly::monomial(Rational::from_integer(1.into()), 1))
    }

    pub fn from_rational(self: &Arc<Self>, q: &Rational) -> NfElem {
        NfElem::from_poly(self, &UniPoly::constant(q.clone()))
    }

    /// Element with the given power-basis coordinates (missing ones are zero).
    pub fn element(self: &Arc<Self>, coords: &[Rational]) -> Result<NfElem, ScalarError> {
        if coords.len() > self.degree() {
            return Err(ScalarError::Parse {
                what: "number field coordinates",
                input: format!("{} coordinates for degree {}", coords.len(), self.degree()),
            });
        }
        Ok(NfElem::from_poly(self, &UniPoly::new(coords.to_vec())))
    }
}

/// Element of a number field, stored by its power-basis coordinates.
#[derive(Clone)]
pub struct NfElem {
    coords: Vec<Rational>,
    field: Arc<NumberField>,
}

impl NfElem {
    pub fn from_poly(field: &Arc<NumberField>, p: &UniPoly<Rational>) -> Self {
        let r = p.rem(&field.modulus).expect("modulus is nonzero");
        let mut coords = r.into_coeffs();
        coords.resize(field.degree(), num_traits::zero::<Rational>());
        NfElem { coords, field: field.clone() }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn to_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coords.clone())
    }

    fn same_field(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field,
            "number field elements from different fields"
        );
    }

    /// Value in Q if the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(|c| c.is_zero()).then(|| self.coords[0].clone())
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field.modulus == other.field.modulus
    }
}

impl Eq for NfElem {}

impl Hash for NfElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NfElem({self} mod {})", self.field.modulus.to_string_var("t"))
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string_var("t");
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            f.write_str(&s)
        } else {
            write!(f, "({s})")
        }
    }
}

impl Ring for NfElem {
    fn zero_like(&self) -> Self {
        NfElem { coords: vec![num_traits::zero::<Rational>(); self.coords.len()], field: self.field.clone() }
    }
    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coords[0] = Rational::from_integer(1.into());
        z
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        NfElem { coords, field: self.field.clone() }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        NfElem { coords, field: self.field.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        NfElem::from_poly(&self.field, &self.to_poly().mul(&rhs.to_poly()))
    }
    fn neg(&self) -> Self {
        NfElem { coords: self.coords.iter().map(|c| -c).collect(), field: self.field.clone() }
    }
    fn embed_rational(&self, q: &Rational) -> Result<Self, ScalarError> {
        Ok(self.field.from_rational(q))
    }
}

impl Field for NfElem {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (g, s, _) = self.to_poly().xgcd(&self.field.modulus);
        if g.degree() != Some(0) {
            return Err(ScalarError::NonInvertible(format!(
                "{self}: gcd with modulus is {}",
                g.to_string_var("t")
            )));
        }
        Ok(NfElem::from_poly(&self.field, &s))
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(NumberField::parse("t^2-4"), Err(ScalarError::ReducibleModulus(_))));
        assert!(NumberField::parse("t^2-5").is_ok());
    }

    #[test]
    fn sqrt5_arithmetic() {
        let k = Arc::new(NumberField::parse("t^2-5").unwrap());
        let s = k.generator();
        assert_eq!(s.mul(&s).as_rational(), Some(rat(5, 1)));
        let gamma = k.element(&[rat(1, 16), rat(-3, 16)]).unwrap();
        // gamma is a root of x^2 - x/8 - 11/64
        let m: UniPoly<Rational> = "x^2 - 1/8*x - 11/64".parse().unwrap();
        let v = m.eval_with(&gamma, |c| k.from_rational(c));
        assert!(v.is_zero());
    }
}
