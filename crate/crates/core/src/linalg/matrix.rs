use std::fmt;

use crate::poly::ParamPoly;
use crate::scalars::{Field, Ring, ScalarError};

/// Square matrix over a single scalar domain, stored row-major.
///
/// Linear maps act on the left: column `j` holds the coordinates of the
/// image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Exact division where the quotient exists; division by units in fields,
/// multivariate exact division for parameter polynomials.
pub trait DivExact: Sized {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl<F: Field> DivExact for F {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div(d).ok()
    }
}

impl DivExact for ParamPoly {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        ParamPoly::div_exact(self, d)
    }
}

impl<T: Ring> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<T>]) -> Self {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n), "matrix must be square");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for c in cols {
                entries.push(c[i].clone());
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn identity(n: usize, sample: &T) -> Self {
        ExactMatrix::from_fn(n, |i, j| if i == j { sample.one_like() } else { sample.zero_like() })
    }

    pub fn zero(n: usize, sample: &T) -> Self {
        ExactMatrix::from_fn(n, |_, _| sample.zero_like())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// A representative scalar, used to create constants of the same domain.
    pub fn sample(&self) -> &T {
        &self.entries[0]
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.entries[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.sample().zero_like();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                entries.push(acc);
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| {
                let mut acc = self.sample().zero_like();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc.add(&self.get(i, j).mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.n, self.sample());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(self.sample().zero_like(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<ExactMatrix<U>, E> {
        Ok(ExactMatrix { n: self.n, entries: self.entries.iter().map(f).collect::<Result<_, _>>()? })
    }

    /// `g^-1 * self * g` given both `g` and its inverse.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g_inv.mul(self).mul(g)
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        ExactMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// Row-major text dump, one row per line, entries separated by `, `.
    pub fn dump(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Determinant by fraction-free Gauss-Bareiss elimination.
    pub fn det_bareiss(&self) -> T
    where
        T: DivExact,
    {
        let n = self.n;
        let mut a = self.rows();
        let mut sign_neg = false;
        let mut prev = self.sample().one_like();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_neg = !sign_neg;
                    }
                    None => return self.sample().zero_like(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_neg {
            d.neg()
        } else {
            d
        }
    }
}

impl<T: Field> ExactMatrix<T> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (rows, piv) = rref_rows(self.rows(), self.n);
        (ExactMatrix::from_rows(rows), piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        kernel_of_rows(self.rows(), self.n)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let n = self.n;
        let mut aug: Vec<Vec<T>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                for j in 0..n {
                    r.push(if i == j { self.sample().one_like() } else { self.sample().zero_like() });
                }
                r
            })
            .collect();
        let (red, piv) = rref_rows(std::mem::take(&mut aug), 2 * n);
        if piv.len() < n || piv[n - 1] >= n {
            return Err(ScalarError::NonInvertible("singular matrix".into()));
        }
        Ok(ExactMatrix::from_rows(red.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    pub fn det(&self) -> T {
        self.det_bareiss()
    }
}

/// Row reduction of an arbitrary `rows.len() x ncols` matrix.
pub fn rref_rows<T: Field>(mut rows: Vec<Vec<T>>, ncols: usize) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let v = rows[i][k].sub(&f.mul(&rows[r][k]));
                    rows[i][k] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// Rank of a list of vectors of length `ncols`.
pub fn rank_of_rows<T: Field>(rows: Vec<Vec<T>>, ncols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref_rows(rows, ncols).1.len()
}

pub fn kernel_of_rows<T: Field>(rows: Vec<Vec<T>>, ncols: usize) -> Vec<Vec<T>> {
    let Some(sample) = rows.iter().flatten().next().cloned() else { return Vec::new() };
    let (red, piv) = rref_rows(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![sample.zero_like(); ncols];
        v[free] = sample.one_like();
        for (r, &pc) in piv.iter().enumerate() {
            v[pc] = red[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

impl<T: Ring> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.n, self.n)?;
        for r in self.rows() {
            writeln!(f, "  {}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Ring> fmt::Display for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Parses a row-major dump: one row per line, entries separated by commas.
pub fn parse_dump<T: Ring>(s: &str, parse: impl Fn(&str) -> Result<T, ScalarError>) -> Result<ExactMatrix<T>, ScalarError> {
    let rows = s
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|x| parse(x.trim())).collect::<Result<Vec<T>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err(ScalarError::Parse { what: "square matrix dump", input: s.into() });
    }
    Ok(ExactMatrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Fp, Rational};

    fn q(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(q(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(q(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(q(&[&[1, 2], &[3, 4]]).rank(), 2);
    }

    #[test]
    fn inverse_and_det() {
        let m = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.det(), rat(18, 1));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|x| Ring::is_zero(x)));
    }

    #[test]
    fn dump_roundtrip() {
        let m = q(&[&[1, -2], &[0, 5]]).scale(&rat(1, 3));
        let back = parse_dump(&m.dump(), crate::scalars::parse_rational).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn fp_rank() {
        let m = ExactMatrix::from_rows(vec![
            vec![Fp::new(1, 5).unwrap(), Fp::new(2, 5).unwrap()],
            vec![Fp::new(3, 5).unwrap(), Fp::new(1, 5).unwrap()],
        ]);
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(m.rank(), 1);
    }
}
