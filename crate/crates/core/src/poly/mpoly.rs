use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::UniPoly;
use crate::scalars::{Rational, Ring, ScalarError};

/// The four parameters of the universal 3-generated algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Alpha,
    Beta,
    Gamma,
    Psi,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::Alpha, Param::Beta, Param::Gamma, Param::Psi];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        PARAM_NAMES[self.index()]
    }
}

impl FromStr for Param {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alpha" => Ok(Param::Alpha),
            "beta" => Ok(Param::Beta),
            "gamma" => Ok(Param::Gamma),
            "psi" => Ok(Param::Psi),
            _ => Err(ScalarError::Parse { what: "parameter name", input: s.into() }),
        }
    }
}

pub const PARAM_NAMES: [&str; 4] = ["alpha", "beta", "gamma", "psi"];

type Exps = [u32; 4];

/// Polynomial in alpha, beta, gamma, psi with rational coefficients.
///
/// Stored sparsely; zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exps, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        ParamPoly::constant(num_traits::one::<Rational>())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        ParamPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        ParamPoly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(p: Param) -> Self {
        let mut e = [0; 4];
        e[p.index()] = 1;
        ParamPoly::term(num_traits::one::<Rational>(), e)
    }

    pub fn term(c: Rational, exps: [u32; 4]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        ParamPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: Exps, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; 4])
    }

    /// The value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(num_traits::zero::<Rational>())
        } else if self.is_constant() {
            self.terms.get(&[0; 4]).cloned()
        } else {
            None
        }
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms.keys().map(|e| e[p.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Parameters that actually occur.
    pub fn support(&self) -> Vec<Param> {
        Param::ALL.into_iter().filter(|&p| self.degree_in(p) > 0).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Substitutes rational values for the assigned parameters.
    pub fn substitute(&self, point: &[Option<Rational>; 4]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            let mut c = c.clone();
            let mut ne = *e;
            for (i, v) in point.iter().enumerate() {
                if let Some(v) = v {
                    if e[i] > 0 {
                        c *= num_traits::pow(v.clone(), e[i] as usize);
                    }
                    ne[i] = 0;
                }
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Full evaluation in an arbitrary domain. Coefficients are embedded
    /// through `values[0]`, so all four values must share one domain.
    pub fn evaluate<T: Ring>(&self, values: &[T; 4]) -> Result<T, ScalarError> {
        let sample = &values[0];
        let mut powers: Vec<Vec<T>> = Vec::with_capacity(4);
        for (i, v) in values.iter().enumerate() {
            let d = self.degree_in(Param::ALL[i]) as usize;
            let mut pw = Vec::with_capacity(d + 1);
            pw.push(sample.one_like());
            for k in 1..=d {
                pw.push(pw[k - 1].mul(v));
            }
            powers.push(pw);
        }
        let mut acc = sample.zero_like();
        for (e, c) in &self.terms {
            let mut t = sample.embed_rational(c)?;
            for i in 0..4 {
                if e[i] > 0 {
                    t = t.mul(&powers[i][e[i] as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Reads the polynomial as univariate in `p`, if no other parameter occurs.
    pub fn to_univariate(&self, p: Param) -> Option<UniPoly<Rational>> {
        let d = self.degree_in(p) as usize;
        let mut coeffs = vec![num_traits::zero::<Rational>(); d + 1];
        for (e, c) in &self.terms {
            for (i, &k) in e.iter().enumerate() {
                if i != p.index() && k > 0 {
                    return None;
                }
            }
            coeffs[e[p.index()] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: Param, f: &UniPoly<Rational>) -> Self {
        let mut out = ParamPoly::zero();
        for (k, c) in f.coeffs().iter().enumerate() {
            let mut e = [0; 4];
            e[p.index()] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Reduces the degree in `p` modulo a monic univariate polynomial `m(p)`.
    ///
    /// Working modulo the minimal polynomial of an algebraic parameter value
    /// makes every identity that survives valid for all roots at once.
    pub fn reduce_mod(&self, p: Param, m: &UniPoly<Rational>) -> ParamPoly {
        let d = m.degree().expect("nonzero modulus") as u32;
        assert!(m.lead().is_some_and(|l| l.is_one()), "modulus must be monic");
        if self.degree_in(p) < d {
            return self.clone();
        }
        let mut work = self.clone();
        loop {
            let top = work
                .terms
                .iter()
                .filter(|(e, _)| e[p.index()] >= d)
                .map(|(e, c)| (*e, c.clone()))
                .max_by_key(|(e, _)| e[p.index()]);
            let Some((e, c)) = top else { break };
            work.terms.remove(&e);
            let shift = e[p.index()] - d;
            for (k, mc) in m.coeffs().iter().enumerate().take(d as usize) {
                let mut ne = e;
                ne[p.index()] = shift + k as u32;
                work.add_term(ne, -(&c * mc));
            }
        }
        work
    }

    fn lead_term(&self) -> Option<(&Exps, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact multivariate division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &ParamPoly) -> Option<ParamPoly> {
        let (de, dc) = d.lead_term()?;
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((e, c)) = rem.lead_term().map(|(e, c)| (*e, c.clone())) {
            let mut qe = [0; 4];
            for i in 0..4 {
                qe[i] = e[i].checked_sub(de[i])?;
            }
            let qc = c / dc;
            let t = ParamPoly::term(qc, qe);
            rem = Ring::sub(&rem, &Ring::mul(&t, d));
            quot = Ring::add(&quot, &t);
        }
        Some(quot)
    }
}

impl Ring for ParamPoly {
    fn zero_like(&self) -> Self {
        ParamPoly::zero()
    }
    fn one_like(&self) -> Self {
        ParamPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; 4]).is_some_and(|c| c.is_one())
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = ParamPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn embed_rational(&self, q: &Rational) -> Result<Self, ScalarError> {
        Ok(ParamPoly::constant(q.clone()))
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(PARAM_NAMES[i].to_string()),
                    _ => factors.push(format!("{}^{}", PARAM_NAMES[i], k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl FromStr for ParamPoly {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = ParamPoly::zero();
        for (c, e) in super::parse::parse_terms(s, &PARAM_NAMES)? {
            out.add_term([e[0], e[1], e[2], e[3]], c);
        }
        Ok(out)
    }
}

/// Monic gcd of a family of polynomials that are univariate in `p`;
/// `None` if some entry involves another parameter.
pub fn univariate_gcd_all(
    entries: impl IntoIterator<Item = ParamPoly>,
    p: Param,
) -> Option<UniPoly<Rational>> {
    let mut g = UniPoly::<Rational>::zero();
    for e in entries {
        let u = e.to_univariate(p)?;
        g = if g.is_zero() { u.monic() } else { g.gcd(&u) };
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn pp(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    #[test]
    fn specialize_examples() {
        let f = pp("64/9*alpha^2 - 16/9*alpha - 1/3");
        let v = f.substitute(&[Some(rat(1, 4)), None, None, None]);
        assert_eq!(v.constant_value(), Some(rat(-1, 3)));
        let g = pp("alpha + beta").substitute(&[Some(rat(1, 1)), None, None, None]);
        assert_eq!(g, pp("1 + beta"));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["8/3*alpha*gamma + beta - 2/3*psi", "-alpha^2*psi + 1/2", "0", "-1/3"] {
            let p = pp(s);
            assert_eq!(pp(&p.to_string()), p);
        }
    }

    #[test]
    fn reduce_mod_sqrt5() {
        // gamma^2 - gamma/8 - 11/64 has roots 1/16 +- 3*sqrt5/16
        let m: UniPoly<Rational> = "x^2 - 1/8*x - 11/64".parse().unwrap();
        let g = ParamPoly::var(Param::Gamma);
        let sq = Ring::mul(&g, &g).reduce_mod(Param::Gamma, &m);
        assert_eq!(sq, pp("1/8*gamma + 11/64"));
    }

    #[test]
    fn exact_division() {
        let a = pp("alpha - beta");
        let b = pp("alpha^2 + psi");
        let prod = Ring::mul(&a, &b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(pp("alpha + 1").div_exact(&pp("beta")), None);
    }
}
