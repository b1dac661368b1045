use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, Rational, Ring, ScalarError};

/// Element of the prime field F_p for a word-sized prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Result<Self, ScalarError> {
        if !is_prime_u64(modulus) {
            return Err(ScalarError::NotPrime(modulus));
        }
        Ok(Fp { value: value % modulus, modulus })
    }

    /// Constructor for hot paths where the modulus is already known to be prime.
    pub(crate) fn new_unchecked(value: u64, modulus: u64) -> Self {
        Fp { value: value % modulus, modulus }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Result<Self, ScalarError> {
        let v = value.rem_euclid(modulus as i64) as u64;
        Fp::new(v, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "prime field elements with different moduli");
    }

    /// Canonical image of a rational number in F_p.
    pub fn from_rational(q: &Rational, modulus: u64) -> Result<Self, ScalarError> {
        let p = BigInt::from(modulus);
        let den = q.denom().mod_floor(&p).to_u64().unwrap();
        if den == 0 {
            return Err(ScalarError::NonEmbeddable { value: q.to_string(), modulus });
        }
        let num = q.numer().mod_floor(&p).to_u64().unwrap();
        let d = Fp::new_unchecked(den, modulus);
        Ok(Fp::new_unchecked(num, modulus).mul(&d.inv()?))
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value as u128 + rhs.value as u128;
        Fp { value: (s % self.modulus as u128) as u64, modulus: self.modulus }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.modulus - (rhs.value - self.value)
        };
        Fp { value: v, modulus: self.modulus }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp { value: mul_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        Fp { value: v, modulus: self.modulus }
    }
    fn embed_rational(&self, q: &Rational) -> Result<Self, ScalarError> {
        Fp::from_rational(q, self.modulus)
    }
}

impl Field for Fp {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.value == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Fp { value: pow_mod(self.value, self.modulus - 2, self.modulus), modulus: self.modulus })
    }
    fn characteristic(&self) -> u64 {
        self.modulus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime_u64(2305843009213693951));
        assert!(!is_prime_u64(3215031751));
        assert!(Fp::new(1, 9).is_err());
    }

    #[test]
    fn rational_images() {
        assert_eq!(Fp::from_rational(&rat(1, 4), 5).unwrap().value(), 4);
        assert_eq!(Fp::from_rational(&rat(-1, 8), 5).unwrap().value(), 3);
        assert_eq!(Fp::from_rational(&rat(5, 32), 7).unwrap().value(), 3);
        assert!(Fp::from_rational(&rat(1, 3), 3).is_err());
    }
}
