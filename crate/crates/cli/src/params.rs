//! Resolution of the global field and parameter flags into exact values.

use std::sync::Arc;

use pcaxial::poly::{AlgebraicNumber, UniPoly};
use pcaxial::roots::solve_order_2gen;
use pcaxial::scalars::{Domain, NumberField, Rational, Ring, Scalar};

use crate::UsageError;

/// Parameter values as given; `None` entries stay symbolic where allowed.
#[derive(Clone, Debug)]
pub struct Params {
    pub domain: Domain,
    pub values: [Option<Scalar>; 4],
}

impl Params {
    pub fn rational_values(&self) -> Option<[Option<Rational>; 4]> {
        let mut out: [Option<Rational>; 4] = Default::default();
        for (o, v) in out.iter_mut().zip(&self.values) {
            *o = match v {
                None => None,
                Some(Scalar::Q(q)) => Some(q.clone()),
                Some(_) => return None,
            };
        }
        Some(out)
    }

    pub fn all_given(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    pub fn require_all(&self) -> Result<[Scalar; 4], UsageError> {
        let names = ["alpha", "beta", "gamma", "psi"];
        let mut out = Vec::new();
        for (v, n) in self.values.iter().zip(names) {
            out.push(v.clone().ok_or_else(|| UsageError(format!("--{n} is required for this command")))?);
        }
        Ok(out.try_into().expect("four values"))
    }

    /// Values with missing entries set to zero.
    pub fn zero_filled(&self) -> [Scalar; 4] {
        std::array::from_fn(|i| self.values[i].clone().unwrap_or_else(|| self.domain.zero()))
    }
}

/// A `prop1:k=K:root=R` token: the R-th (1-based, increasing) real alpha
/// with `|tau_a tau_b| = K` exactly.
fn resolve_token(tok: &str) -> Result<AlgebraicNumber, UsageError> {
    let bad = || UsageError(format!("malformed token {tok:?}; expected prop1:k=K:root=R"));
    let rest = tok.strip_prefix("prop1:").ok_or_else(bad)?;
    let mut k = None;
    let mut root = None;
    for part in rest.split(':') {
        match part.split_once('=') {
            Some(("k", v)) => k = v.parse::<u64>().ok(),
            Some(("root", v)) => root = v.parse::<usize>().ok(),
            _ => return Err(bad()),
        }
    }
    let (k, root) = (k.ok_or_else(bad)?, root.ok_or_else(bad)?);
    let sol = solve_order_2gen(k).map_err(|e| UsageError(e.to_string()))?;
    let exact: Vec<&AlgebraicNumber> = sol.exact().map(|c| &c.value).collect();
    if root == 0 || root > exact.len() {
        return Err(UsageError(format!("order {k} has {} real values; root={root} is out of range", exact.len())));
    }
    Ok(exact[root - 1].clone())
}

/// Builds the domain and values. Tokens with irrational values switch a
/// rational (or unset) field to Q[t]/(minpoly), with t the chosen real root.
pub fn resolve(field: Option<&str>, raw: [Option<&str>; 4]) -> Result<Params, UsageError> {
    let mut domain: Domain = match field {
        Some(f) => f.parse().map_err(|e| UsageError(format!("--field: {e}")))?,
        None => Domain::Rationals,
    };
    // the real root that t stands for, when the field came from a token
    let mut embedding: Option<AlgebraicNumber> = None;
    let mut tokens: [Option<AlgebraicNumber>; 4] = Default::default();
    for (slot, r) in tokens.iter_mut().zip(&raw) {
        if let Some(s) = r.filter(|s| s.starts_with("prop1:")) {
            let a = resolve_token(s)?;
            if a.as_rational().is_none() {
                match (&domain, &embedding) {
                    (Domain::Rationals, None) => {
                        domain = Domain::NumberField(Arc::new(
                            NumberField::new(a.minpoly().clone()).map_err(|e| UsageError(e.to_string()))?,
                        ));
                        embedding = Some(a.clone());
                    }
                    (Domain::NumberField(_), Some(e)) if e.minpoly() == a.minpoly() => {}
                    _ => return Err(UsageError(format!("token {s} does not fit field {domain}"))),
                }
            }
            *slot = Some(a);
        }
    }
    let mut values: [Option<Scalar>; 4] = Default::default();
    for ((v, r), tok) in values.iter_mut().zip(raw).zip(tokens) {
        *v = match (r, tok) {
            (None, _) => None,
            (Some(_), Some(a)) => Some(token_value(&domain, &a, embedding.as_ref())?),
            (Some(s), None) => Some(domain.parse_value(s).map_err(|e| UsageError(format!("{s:?}: {e}")))?),
        };
    }
    Ok(Params { domain, values })
}

fn token_value(domain: &Domain, a: &AlgebraicNumber, emb: Option<&AlgebraicNumber>) -> Result<Scalar, UsageError> {
    if let Some(q) = a.as_rational() {
        return domain.embed(&q).map_err(|e| UsageError(e.to_string()));
    }
    let (Domain::NumberField(k), Some(e)) = (domain, emb) else {
        return Err(UsageError("irrational token needs its own number field".into()));
    };
    if a.cmp_value(e).is_eq() {
        return Ok(Scalar::Nf(k.generator()));
    }
    // the other root of a quadratic t^2 + b t + c is -b - t
    let f: &UniPoly<Rational> = a.minpoly();
    if f.degree() == Some(2) {
        let b = f.coeff(1).cloned().unwrap_or_default();
        let t = k.generator();
        return Ok(Scalar::Nf(k.from_rational(&-b).sub(&t)));
    }
    Err(UsageError("two different roots of a field of degree > 2 are not supported".into()))
}
