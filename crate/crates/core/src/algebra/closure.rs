//! Derivation of the universal 3-generated table from the defining identity.
//!
//! Unknowns are the coordinates of every basis product not fixed by the
//! choice of basis, together with the unknown Gram entries. Instances of the
//! trilinear identity and of Frobenius invariance are linear in these
//! unknowns as long as every product of two unknown quantities is avoided;
//! such instances are collected, eliminated on constant pivots, and the
//! process repeats until every unknown is determined.

use std::collections::BTreeMap;

use crate::poly::{Param, ParamPoly};
use crate::scalars::{Rational, Ring};

use super::AlgebraError;

pub(crate) const DIM: usize = 8;
pub(crate) const LABELS: [&str; DIM] = ["a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)"];

const NPAIRS: usize = DIM * (DIM + 1) / 2;

fn pair(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * DIM - i * (i + 1) / 2 + j
}

fn prod_var(i: usize, j: usize, k: usize) -> usize {
    pair(i, j) * DIM + k
}

fn gram_var(i: usize, j: usize) -> usize {
    NPAIRS * DIM + pair(i, j)
}

/// Affine form `constant + sum coeff * unknown` over the parameter ring.
#[derive(Clone, Debug, PartialEq)]
struct LinForm {
    terms: BTreeMap<usize, ParamPoly>,
    constant: ParamPoly,
}

impl LinForm {
    fn constant(c: ParamPoly) -> Self {
        LinForm { terms: BTreeMap::new(), constant: c }
    }

    fn var(v: usize) -> Self {
        LinForm { terms: BTreeMap::from([(v, ParamPoly::one())]), constant: ParamPoly::zero() }
    }

    fn zero() -> Self {
        LinForm::constant(ParamPoly::zero())
    }

    fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    fn add_assign(&mut self, rhs: &LinForm) {
        self.constant = Ring::add(&self.constant, &rhs.constant);
        for (v, c) in &rhs.terms {
            let e = self.terms.entry(*v).or_insert_with(ParamPoly::zero);
            *e = Ring::add(e, c);
            if e.is_zero() {
                self.terms.remove(v);
            }
        }
    }

    fn scale(&self, s: &ParamPoly) -> LinForm {
        if s.is_zero() {
            return LinForm::zero();
        }
        LinForm {
            terms: self.terms.iter().map(|(v, c)| (*v, Ring::mul(c, s))).collect(),
            constant: Ring::mul(&self.constant, s),
        }
    }

    /// Product of two forms, `None` when both involve unknowns.
    fn mul(&self, rhs: &LinForm) -> Option<LinForm> {
        if self.is_constant() {
            Some(rhs.scale(&self.constant))
        } else if rhs.is_constant() {
            Some(self.scale(&rhs.constant))
        } else {
            None
        }
    }

    fn substitute(&mut self, v: usize, value: &LinForm) {
        if let Some(c) = self.terms.remove(&v) {
            self.add_assign(&value.scale(&c));
        }
    }
}

struct State {
    prods: Vec<Vec<LinForm>>,
    gram: Vec<LinForm>,
}

impl State {
    fn initial() -> Self {
        let unit = |k: usize| {
            (0..DIM)
                .map(|l| LinForm::constant(if l == k { ParamPoly::one() } else { ParamPoly::zero() }))
                .collect::<Vec<_>>()
        };
        let mut prods: Vec<Vec<LinForm>> = (0..NPAIRS).map(|_| Vec::new()).collect();
        for i in 0..DIM {
            for j in i..DIM {
                prods[pair(i, j)] = (0..DIM).map(|k| LinForm::var(prod_var(i, j, k))).collect();
            }
        }
        // generators are idempotent; the remaining basis vectors are products
        for (i, j, k) in [(0, 0, 0), (1, 1, 1), (2, 2, 2), (0, 1, 3), (1, 2, 4), (0, 2, 5), (0, 4, 6), (1, 5, 7)] {
            prods[pair(i, j)] = unit(k);
        }
        let mut gram: Vec<LinForm> = vec![LinForm::zero(); NPAIRS];
        for i in 0..DIM {
            for j in i..DIM {
                gram[pair(i, j)] = LinForm::var(gram_var(i, j));
            }
        }
        let p = |x: Param| LinForm::constant(ParamPoly::var(x));
        for i in 0..3 {
            gram[pair(i, i)] = LinForm::constant(ParamPoly::one());
        }
        gram[pair(0, 1)] = p(Param::Alpha);
        gram[pair(1, 2)] = p(Param::Beta);
        gram[pair(0, 2)] = p(Param::Gamma);
        gram[pair(1, 5)] = p(Param::Psi);
        State { prods, gram }
    }

    fn prod(&self, i: usize, j: usize) -> &[LinForm] {
        &self.prods[pair(i, j)]
    }

    /// `v * e_k` where `v` is a vector of forms; `None` if nonlinear.
    fn mul_by_basis(&self, v: &[LinForm], k: usize) -> Option<Vec<LinForm>> {
        let mut out = vec![LinForm::zero(); DIM];
        for (l, coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (m, p) in self.prod(l, k).iter().enumerate() {
                if !p.is_zero() {
                    out[m].add_assign(&coef.mul(p)?);
                }
            }
        }
        Some(out)
    }

    /// `(v, e_k)` for a vector of forms; `None` if nonlinear.
    fn form_with_basis(&self, v: &[LinForm], k: usize) -> Option<LinForm> {
        let mut out = LinForm::zero();
        for (l, coef) in v.iter().enumerate() {
            if !coef.is_zero() {
                out.add_assign(&coef.mul(&self.gram[pair(l, k)])?);
            }
        }
        Some(out)
    }

    fn equations(&self) -> Vec<LinForm> {
        let mut eqs = Vec::new();
        for i in 0..DIM {
            for j in i..DIM {
                for k in j..DIM {
                    if let Some(e) = self.trilinear(i, j, k) {
                        eqs.extend(e.into_iter().filter(|f| !f.is_zero()));
                    }
                }
            }
        }
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if let Some(e) = self.frobenius(i, j, k) {
                        if !e.is_zero() {
                            eqs.push(e);
                        }
                    }
                }
            }
        }
        eqs
    }

    /// `(xy)z + (yz)x + (zx)y - (x,y)z - (y,z)x - (z,x)y` on basis vectors.
    fn trilinear(&self, i: usize, j: usize, k: usize) -> Option<Vec<LinForm>> {
        let mut lhs = self.mul_by_basis(self.prod(i, j), k)?;
        for x in [self.mul_by_basis(self.prod(j, k), i)?, self.mul_by_basis(self.prod(k, i), j)?] {
            for (l, f) in x.iter().enumerate() {
                lhs[l].add_assign(f);
            }
        }
        let minus_one = ParamPoly::int(-1);
        lhs[k].add_assign(&self.gram[pair(i, j)].scale(&minus_one));
        lhs[i].add_assign(&self.gram[pair(j, k)].scale(&minus_one));
        lhs[j].add_assign(&self.gram[pair(k, i)].scale(&minus_one));
        Some(lhs)
    }

    /// `(e_i e_j, e_k) - (e_i, e_j e_k)`.
    fn frobenius(&self, i: usize, j: usize, k: usize) -> Option<LinForm> {
        let mut left = self.form_with_basis(self.prod(i, j), k)?;
        let right = self.form_with_basis(self.prod(j, k), i)?;
        left.add_assign(&right.scale(&ParamPoly::int(-1)));
        Some(left)
    }

    fn substitute(&mut self, v: usize, value: &LinForm) {
        for p in &mut self.prods {
            for f in p.iter_mut() {
                f.substitute(v, value);
            }
        }
        for f in &mut self.gram {
            f.substitute(v, value);
        }
    }

    fn unknown_count(&self) -> usize {
        let mut vars = std::collections::BTreeSet::new();
        for f in self.prods.iter().flatten().chain(&self.gram) {
            vars.extend(f.terms.keys().copied());
        }
        vars.len()
    }
}

/// Eliminates on constant pivots; returns the number of unknowns solved.
fn eliminate(state: &mut State, mut eqs: Vec<LinForm>) -> Result<usize, AlgebraError> {
    let mut solved = 0;
    loop {
        eqs.retain(|e| !e.is_zero());
        if let Some(e) = eqs.iter().find(|e| e.is_constant()) {
            return Err(AlgebraError::ClosureFailure(format!("inconsistent equation {} = 0", e.constant)));
        }
        // smallest equation with a constant coefficient
        let choice = eqs
            .iter()
            .enumerate()
            .filter_map(|(idx, e)| {
                let (v, c) = e.terms.iter().find(|(_, c)| c.is_constant())?;
                Some((e.terms.len(), idx, *v, c.constant_value().unwrap()))
            })
            .min_by_key(|t| (t.0, t.1));
        let Some((_, idx, v, c)) = choice else { break };
        let mut value = eqs.swap_remove(idx);
        value.terms.remove(&v);
        let value = value.scale(&ParamPoly::constant(-num_traits::one::<Rational>() / c));
        for e in &mut eqs {
            e.substitute(v, &value);
        }
        state.substitute(v, &value);
        solved += 1;
    }
    Ok(solved)
}

/// Structure constants and Gram matrix of the universal algebra, as
/// `(products[i][j], gram[i][j])` with full symmetric indexing.
pub(crate) fn derive_universal() -> Result<(Vec<Vec<Vec<ParamPoly>>>, Vec<Vec<ParamPoly>>), AlgebraError> {
    let mut state = State::initial();
    loop {
        let eqs = state.equations();
        if eliminate(&mut state, eqs)? == 0 {
            break;
        }
    }
    let left = state.unknown_count();
    if left > 0 {
        return Err(AlgebraError::ClosureFailure(format!("{left} unknowns remain undetermined")));
    }
    let konst = |f: &LinForm| f.constant.clone();
    let products = (0..DIM)
        .map(|i| (0..DIM).map(|j| state.prod(i, j).iter().map(konst).collect()).collect())
        .collect();
    let gram = (0..DIM).map(|i| (0..DIM).map(|j| konst(&state.gram[pair(i, j)])).collect()).collect();
    Ok((products, gram))
}
