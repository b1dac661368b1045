use std::fmt::Write;
use std::sync::OnceLock;

use crate::linalg::ExactMatrix;
use crate::poly::ParamPoly;
use crate::scalars::{rat, Field, Ring, ScalarError};

use super::closure::{derive_universal, LABELS};
use super::AlgebraError;

/// Coordinates in the basis of some table.
pub type AlgebraElement<T> = Vec<T>;

/// Commutative algebra given by structure constants and a Gram matrix.
#[derive(Clone, PartialEq)]
pub struct AlgebraTable<T> {
    labels: Vec<String>,
    /// `products[i][j]` is the coordinate vector of `e_i e_j`.
    products: Vec<Vec<Vec<T>>>,
    gram: ExactMatrix<T>,
}

static UNIVERSAL: OnceLock<AlgebraTable<ParamPoly>> = OnceLock::new();

/// The universal table over the parameter ring, derived once per process.
pub fn universal() -> &'static AlgebraTable<ParamPoly> {
    UNIVERSAL.get_or_init(|| AlgebraTable::build_universal().expect("universal algebra closes"))
}

impl AlgebraTable<ParamPoly> {
    /// Derives the universal 8-dimensional table in the basis
    /// a, b, c, ab, bc, ac, a(bc), b(ac).
    pub fn build_universal() -> Result<Self, AlgebraError> {
        let (products, gram) = derive_universal()?;
        Ok(AlgebraTable {
            labels: LABELS.iter().map(|s| s.to_string()).collect(),
            products,
            gram: ExactMatrix::from_rows(gram),
        })
    }

    /// Cached copy of [`AlgebraTable::build_universal`].
    pub fn universal() -> &'static Self {
        universal()
    }

    /// Substitutes `(alpha, beta, gamma, psi)`; characteristics 2 and 3 are
    /// rejected since the table has denominators 2 and 3 downstream.
    pub fn specialize<F: Field>(&self, point: &[F; 4]) -> Result<AlgebraTable<F>, AlgebraError> {
        let ch = point[0].characteristic();
        if ch == 2 || ch == 3 {
            return Err(ScalarError::UnsupportedCharacteristic(ch).into());
        }
        let ev = |p: &ParamPoly| p.evaluate(point);
        let products = self
            .products
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(ev).collect::<Result<Vec<_>, _>>()).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        let gram = self.gram.try_map(ev)?;
        Ok(AlgebraTable { labels: self.labels.clone(), products, gram })
    }

    /// Partial substitution, keeping unassigned parameters symbolic.
    pub fn substitute(&self, point: &[Option<crate::scalars::Rational>; 4]) -> Self {
        self.map(|p| p.substitute(point))
    }
}

impl<T: Ring> AlgebraTable<T> {
    pub fn from_parts(labels: Vec<String>, products: Vec<Vec<Vec<T>>>, gram: ExactMatrix<T>) -> Self {
        AlgebraTable { labels, products, gram }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &ExactMatrix<T> {
        &self.gram
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[T] {
        &self.products[i][j]
    }

    fn sample(&self) -> &T {
        self.gram.sample()
    }

    pub fn zero_element(&self) -> AlgebraElement<T> {
        vec![self.sample().zero_like(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<T> {
        let mut v = self.zero_element();
        v[i] = self.sample().one_like();
        v
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> AlgebraTable<U> {
        AlgebraTable {
            labels: self.labels.clone(),
            products: self.products.iter().map(|r| r.iter().map(|v| v.iter().map(&f).collect()).collect()).collect(),
            gram: self.gram.map(&f),
        }
    }

    pub fn mul(&self, x: &[T], y: &[T]) -> AlgebraElement<T> {
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (o, p) in out.iter_mut().zip(&self.products[i][j]) {
                    if !p.is_zero() {
                        *o = o.add(&c.mul(p));
                    }
                }
            }
        }
        out
    }

    /// Frobenius form `(x, y)`.
    pub fn form(&self, x: &[T], y: &[T]) -> T {
        let gy = self.gram.apply(y);
        x.iter().zip(&gy).fold(self.sample().zero_like(), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    /// Matrix of `y -> xy`; column `j` is `x e_j`.
    pub fn left_mult(&self, x: &[T]) -> ExactMatrix<T> {
        let cols: Vec<Vec<T>> = (0..self.dim()).map(|j| self.mul(x, &self.basis(j))).collect();
        ExactMatrix::from_columns(&cols)
    }

    pub fn is_idempotent(&self, x: &[T]) -> bool {
        self.mul(x, x) == x
    }

    /// Miyamoto involution `(8 L^2 - 5 I) / 3` of an axis.
    pub fn miyamoto(&self, axis: &[T]) -> Result<ExactMatrix<T>, AlgebraError> {
        self.check_len(axis)?;
        if !self.is_idempotent(axis) {
            return Err(AlgebraError::NotAnAxis);
        }
        let s = self.sample();
        let l = self.left_mult(axis);
        let id = ExactMatrix::identity(self.dim(), s);
        let half = s.embed_rational(&rat(1, 2))?;
        let fusion = l.sub(&id).mul(&l.add(&id)).mul(&l.sub(&id.scale(&half)));
        if !fusion.is_zero() {
            return Err(AlgebraError::NotAnAxis);
        }
        let third = s.embed_rational(&rat(1, 3))?;
        Ok(l.mul(&l).scale(&s.from_int_like(8)).sub(&id.scale(&s.from_int_like(5))).scale(&third))
    }

    /// Miyamoto involution of the `i`-th basis vector.
    pub fn miyamoto_basis(&self, i: usize) -> Result<ExactMatrix<T>, AlgebraError> {
        self.miyamoto(&self.basis(i))
    }

    /// True when `m(e_i e_j) = m(e_i) m(e_j)` for all basis pairs.
    pub fn is_automorphism(&self, m: &ExactMatrix<T>) -> bool {
        let cols: Vec<Vec<T>> = (0..self.dim()).map(|j| m.column(j)).collect();
        (0..self.dim()).all(|i| (i..self.dim()).all(|j| m.apply(&self.products[i][j]) == self.mul(&cols[i], &cols[j])))
    }

    /// True when `m^T G m = G`.
    pub fn preserves_form(&self, m: &ExactMatrix<T>) -> bool {
        m.transpose().mul(&self.gram).mul(m) == self.gram
    }

    /// Image of an axis under an automorphism.
    pub fn conjugate_axis(&self, axis: &[T], m: &ExactMatrix<T>) -> Result<AlgebraElement<T>, AlgebraError> {
        self.check_len(axis)?;
        if !self.is_automorphism(m) {
            return Err(AlgebraError::NotAutomorphism);
        }
        Ok(m.apply(axis))
    }

    /// Restriction to the span of a subset of basis vectors, which must be
    /// closed under multiplication.
    pub fn subtable(&self, idx: &[usize]) -> Result<AlgebraTable<T>, AlgebraError> {
        let outside = |v: &[T]| v.iter().enumerate().any(|(k, x)| !x.is_zero() && !idx.contains(&k));
        let mut products = Vec::new();
        for &i in idx {
            let mut row = Vec::new();
            for &j in idx {
                let p = &self.products[i][j];
                if outside(p) {
                    return Err(AlgebraError::NotSubalgebra(idx.to_vec()));
                }
                row.push(idx.iter().map(|&k| p[k].clone()).collect());
            }
            products.push(row);
        }
        Ok(AlgebraTable {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            products,
            gram: self.gram.submatrix(idx),
        })
    }

    /// Basis triples where the trilinear identity fails.
    pub fn trilinear_defects(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                    let mut lhs = self.mul(&self.mul(&x, &y), &z);
                    for t in [self.mul(&self.mul(&y, &z), &x), self.mul(&self.mul(&z, &x), &y)] {
                        lhs = add_vec(&lhs, &t);
                    }
                    let g = |u: usize, v: usize| self.gram.get(u, v).clone();
                    let mut rhs = self.zero_element();
                    rhs[k] = rhs[k].add(&g(i, j));
                    rhs[i] = rhs[i].add(&g(j, k));
                    rhs[j] = rhs[j].add(&g(k, i));
                    if lhs != rhs {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Basis triples where `(xy, z) = (x, yz)` fails.
    pub fn frobenius_defects(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let l = self.form(&self.products[i][j], &self.basis(k));
                    let r = self.form(&self.basis(i), &self.products[j][k]);
                    if l != r {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Text dump: one line per unordered basis product, then the Gram matrix.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let v = &self.products[i][j];
                let _ = writeln!(
                    s,
                    "{} * {} = [{}]",
                    self.labels[i],
                    self.labels[j],
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                );
            }
        }
        for i in 0..n {
            for j in i..n {
                let _ = writeln!(s, "({}, {}) = {}", self.labels[i], self.labels[j], self.gram.get(i, j));
            }
        }
        s
    }

    fn check_len(&self, x: &[T]) -> Result<(), AlgebraError> {
        if x.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { got: x.len(), dim: self.dim() });
        }
        Ok(())
    }
}

impl<T: Ring> std::fmt::Debug for AlgebraTable<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.dump())
    }
}

pub(crate) fn add_vec<T: Ring>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

impl<T: Field> AlgebraTable<T> {
    pub fn gram_rank(&self) -> usize {
        self.gram.rank()
    }
}
