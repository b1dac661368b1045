//! Enumeration of finite matrix groups and structural analysis of the result.
//!
//! Groups over small prime fields are stored as packed nibble arrays; larger
//! primes use word-sized entries. Over characteristic zero the generators are
//! first reduced modulo a large prime where every entry is integral; the
//! image is a quotient of the group, so an image larger than the cutoff
//! proves the group is too, and a finite image is confirmed by an exact
//! enumeration of the same size.

pub mod analysis;
pub mod catalog;
pub mod closure;
pub mod rep;

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rustc_hash::FxHashSet;

pub use analysis::DerivedInfo;
pub use catalog::{identify, CatalogEntry, CATALOG};
pub use closure::Closure;
pub use rep::{ExactRep, GroupRep, LargeFpRep, Packed, SmallFpRep};

use crate::linalg::{ExactMatrix, OrderOutcome};
use crate::poly::roots_mod_p;
use crate::scalars::{is_prime_u64, Domain, Field, Rational, Scalar};

pub const FULL_CUTOFF: usize = 2_000_000;
pub const SWEEP_CUTOFF: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {0} is singular")]
    Singular(usize),
    #[error("generators have different sizes or domains")]
    MixedGenerators,
    #[error("group was not enumerated (more than {0} elements)")]
    NotEnumerated(usize),
    #[error("no prime below 2^31 reduces the generators")]
    NoSuitablePrime,
}

/// What to compute once enumeration completes.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub derived: bool,
    pub center: bool,
    /// Random words sampled for the element-order histogram (0 disables it).
    pub histogram_samples: usize,
}

impl Default for Analysis {
    fn default() -> Self {
        Analysis { derived: true, center: true, histogram_samples: 0 }
    }
}

impl Analysis {
    pub fn order_only() -> Self {
        Analysis { derived: false, center: false, histogram_samples: 0 }
    }
}

/// Summary of one enumeration, serialized as the group report JSON.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GroupReport {
    pub generators: usize,
    pub domain: String,
    /// `order` or `exceeded`.
    pub outcome: String,
    pub cutoff: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_series: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_order: Option<u64>,
    pub catalog: Vec<String>,
    pub layers: Vec<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub order_histogram: BTreeMap<u64, usize>,
    /// Prime used for the modular image in characteristic zero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction_prime: Option<u64>,
}

impl GroupReport {
    pub fn outcome(&self) -> OrderOutcome {
        match self.order {
            Some(n) => OrderOutcome::Order(n),
            None => OrderOutcome::Exceeded(self.cutoff as u64),
        }
    }
}

/// A completed or truncated enumeration in a concrete representation.
pub struct Enumerated<'a, R: GroupRep> {
    pub rep: &'a R,
    pub gens: Vec<R::Elem>,
    pub closure: Closure<R::Elem>,
    pub cutoff: usize,
}

impl<'a, R: GroupRep> Enumerated<'a, R> {
    pub fn new(rep: &'a R, gens: Vec<R::Elem>, cutoff: usize) -> Self {
        let closure = closure::bfs(rep, &gens, cutoff);
        Enumerated { rep, gens, closure, cutoff }
    }

    pub fn order(&self) -> Option<u64> {
        self.closure.complete.then_some(self.closure.elements.len() as u64)
    }

    pub fn elements(&self) -> Result<&FxHashSet<R::Elem>, GroupError> {
        if self.closure.complete {
            Ok(&self.closure.elements)
        } else {
            Err(GroupError::NotEnumerated(self.cutoff))
        }
    }

    pub fn derived_analysis(&self) -> Result<DerivedInfo, GroupError> {
        let n = self.elements()?.len() as u64;
        if n == 1 {
            return Ok(DerivedInfo { series: vec![1], perfect: true, solvable: true, derived_length: Some(0) });
        }
        Ok(analysis::derived_series(self.rep, &self.gens, n))
    }

    pub fn center_order(&self) -> Result<u64, GroupError> {
        Ok(analysis::center_order(self.rep, self.elements()?, &self.gens))
    }

    pub fn report(&self, domain: String, opts: &Analysis) -> GroupReport {
        let order = self.order();
        let mut report = GroupReport {
            generators: self.gens.len(),
            domain,
            outcome: if order.is_some() { "order" } else { "exceeded" }.to_string(),
            cutoff: self.cutoff,
            order,
            solvable: None,
            perfect: None,
            derived_series: None,
            center_order: None,
            catalog: Vec::new(),
            layers: self.closure.layers.clone(),
            order_histogram: BTreeMap::new(),
            reduction_prime: None,
        };
        let Some(n) = order else { return report };
        if opts.derived {
            let d = self.derived_analysis().expect("enumeration completed");
            report.solvable = Some(d.solvable);
            report.perfect = Some(d.perfect);
            report.derived_series = Some(d.series);
        }
        if opts.center {
            report.center_order = Some(self.center_order().expect("enumeration completed"));
        }
        if opts.histogram_samples > 0 {
            report.order_histogram =
                analysis::order_histogram(self.rep, &self.gens, n, opts.histogram_samples, 0x5eed);
        }
        report.catalog = identify(n, report.solvable, report.perfect);
        report
    }
}

fn check_generators(gens: &[ExactMatrix<Scalar>]) -> Result<(usize, Domain), GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    let n = first.dim();
    let domain = first.get(0, 0).domain();
    for (k, g) in gens.iter().enumerate() {
        if g.dim() != n || g.entries().iter().any(|x| !domain.contains(x)) {
            return Err(GroupError::MixedGenerators);
        }
        if g.rank() != n {
            return Err(GroupError::Singular(k));
        }
    }
    Ok((n, domain))
}

fn fp_rows(g: &ExactMatrix<Scalar>) -> Vec<Vec<u64>> {
    g.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| match x {
                    Scalar::Fp(a) => a.value(),
                    _ => unreachable!("checked prime-field generators"),
                })
                .collect()
        })
        .collect()
}

/// Enumerates the group generated by invertible matrices over any supported
/// domain, stopping once more than `cutoff` elements are found.
pub fn bfs_closure(
    gens: &[ExactMatrix<Scalar>],
    cutoff: usize,
    opts: &Analysis,
) -> Result<GroupReport, GroupError> {
    let (n, domain) = check_generators(gens)?;
    let label = domain.to_string();
    match domain {
        Domain::PrimeField(p) => {
            if let Some(rep) = SmallFpRep::new(n, p) {
                let elems = gens
                    .iter()
                    .map(|g| rep.encode(&g.map(|x| match x {
                        Scalar::Fp(a) => *a,
                        _ => unreachable!(),
                    })))
                    .collect();
                Ok(Enumerated::new(&rep, elems, cutoff).report(label, opts))
            } else {
                let rep = LargeFpRep::new(n, p);
                let elems = gens.iter().map(|g| rep.from_rows(&fp_rows(g))).collect();
                Ok(Enumerated::new(&rep, elems, cutoff).report(label, opts))
            }
        }
        _ => bounded_infinite_probe(gens, cutoff, opts),
    }
}

/// Reduction of a characteristic-zero scalar modulo `p`, given the image `r`
/// of the number-field generator. `None` if a denominator vanishes.
fn reduce_scalar(x: &Scalar, p: u64, r: u64) -> Option<u64> {
    let red = |q: &Rational| -> Option<u64> {
        let pb = num_bigint::BigInt::from(p);
        let num = q.numer().mod_floor(&pb).to_u64()?;
        let den = q.denom().mod_floor(&pb).to_u64()?;
        if den == 0 {
            return None;
        }
        Some(crate::scalars::fp::mul_mod(num, crate::scalars::fp::pow_mod(den, p - 2, p), p))
    };
    match x {
        Scalar::Q(q) => red(q),
        Scalar::Nf(a) => {
            let mut acc = 0u64;
            let mut power = 1u64;
            for c in a.coords() {
                acc = (acc + crate::scalars::fp::mul_mod(red(c)?, power, p)) % p;
                power = crate::scalars::fp::mul_mod(power, r, p);
            }
            Some(acc)
        }
        Scalar::Fp(_) => None,
    }
}

/// Picks the largest prime below 2^31 at which every generator reduces and
/// the number-field modulus has a root, returning the prime and that root.
fn reduction_prime(gens: &[ExactMatrix<Scalar>], domain: &Domain) -> Option<(u64, u64)> {
    let mut p = (1u64 << 31) - 1;
    while p > 1 << 29 {
        if is_prime_u64(p) {
            let root = match domain {
                Domain::NumberField(k) => {
                    let lead = k.modulus().primitive_integer().last().cloned()?;
                    if lead.mod_floor(&p.into()) == 0.into() {
                        None
                    } else {
                        roots_mod_p(k.modulus(), p).first().copied()
                    }
                }
                _ => Some(0),
            };
            if let Some(r) = root {
                let ok = gens
                    .iter()
                    .all(|g| g.entries().iter().all(|x| reduce_scalar(x, p, r).is_some()));
                if ok {
                    return Some((p, r));
                }
            }
        }
        p -= 2;
    }
    None
}

/// Enumerates a characteristic-zero group through its image modulo a large
/// prime. An image of more than `cutoff` elements yields `Exceeded`; a
/// finite image is confirmed by exact enumeration before its order is
/// reported, and structural data is computed on the (then isomorphic) image.
pub fn bounded_infinite_probe(
    gens: &[ExactMatrix<Scalar>],
    cutoff: usize,
    opts: &Analysis,
) -> Result<GroupReport, GroupError> {
    let (n, domain) = check_generators(gens)?;
    let (p, r) = reduction_prime(gens, &domain).ok_or(GroupError::NoSuitablePrime)?;
    let rep = LargeFpRep::new(n, p);
    let elems: Vec<_> = gens
        .iter()
        .map(|g| {
            let rows: Vec<Vec<u64>> = g
                .rows()
                .iter()
                .map(|row| row.iter().map(|x| reduce_scalar(x, p, r).unwrap()).collect())
                .collect();
            rep.from_rows(&rows)
        })
        .collect();
    let image = Enumerated::new(&rep, elems, cutoff);
    let mut report = image.report(domain.to_string(), opts);
    report.reduction_prime = Some(p);
    if let Some(m) = report.order {
        let exact_rep = ExactRep::new(n, gens[0].get(0, 0));
        let exact = closure::bfs(&exact_rep, gens, cutoff);
        if !exact.complete || exact.elements.len() as u64 != m {
            // the reduction has a kernel, so the image says nothing about |G|
            let exact = Enumerated { rep: &exact_rep, gens: gens.to_vec(), closure: exact, cutoff };
            let mut r2 = exact.report(domain.to_string(), opts);
            r2.reduction_prime = Some(p);
            return Ok(r2);
        }
    }
    Ok(report)
}

/// Order of the group generated by `gens`, or `Exceeded(cutoff)`.
pub fn group_order(gens: &[ExactMatrix<Scalar>], cutoff: usize) -> Result<OrderOutcome, GroupError> {
    Ok(bfs_closure(gens, cutoff, &Analysis::order_only())?.outcome())
}

/// Exact enumeration over a concrete field, without any reduction.
pub fn exact_closure<T: Field + Eq + std::hash::Hash>(
    gens: &[ExactMatrix<T>],
    cutoff: usize,
) -> Result<Closure<ExactMatrix<T>>, GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    let rep = ExactRep::new(first.dim(), first.get(0, 0));
    Ok(closure::bfs(&rep, gens, cutoff))
}

/// Miyamoto involutions of the generator axes a, b, c at a parameter point.
pub fn axis_involutions(
    point: &crate::algebra::ParameterPoint,
) -> Result<Vec<ExactMatrix<Scalar>>, crate::algebra::AlgebraError> {
    let table = point.specialize(crate::algebra::universal())?;
    (0..3).map(|i| table.miyamoto_basis(i)).collect()
}

/// Order of a single invertible matrix, using word-sized arithmetic over
/// prime fields and exact arithmetic otherwise.
pub fn matrix_order(m: &ExactMatrix<Scalar>, cutoff: u64) -> OrderOutcome {
    match m.get(0, 0) {
        Scalar::Fp(a) => {
            let rep = LargeFpRep::new(m.dim(), a.modulus());
            let x = rep.from_rows(&fp_rows(m));
            match analysis::element_order(&rep, &x, cutoff) {
                Some(k) => OrderOutcome::Order(k),
                None => OrderOutcome::Exceeded(cutoff),
            }
        }
        _ => crate::linalg::element_order(m, cutoff).unwrap_or(OrderOutcome::Exceeded(cutoff)),
    }
}
