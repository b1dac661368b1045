//! Ideals of specialized algebras, fixed-point defects of automorphisms and
//! quotient algebras.

#[cfg(test)]
mod tests;

use std::fmt::Write as _;

use crate::algebra::{AlgebraElement, AlgebraError, AlgebraTable};
use crate::linalg::{kernel_of_rows, rref_rows, ExactMatrix};
use crate::scalars::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("the ideal is the whole algebra")]
    ImproperIdeal,
    #[error("matrix is not an automorphism of the algebra")]
    NotAutomorphism,
    #[error("matrix does not preserve the ideal")]
    NotInvariant,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Ideal stored as reduced row echelon rows; row r has a 1 at `pivots[r]`
/// and zeros at every other pivot column.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    parent_dim: usize,
}

impl<F: Field> IdealBasis<F> {
    /// Echelon basis of the span of `vectors` (not closed under products).
    pub fn span(vectors: &[Vec<F>], parent_dim: usize) -> Self {
        if vectors.is_empty() {
            return IdealBasis { rows: Vec::new(), pivots: Vec::new(), parent_dim };
        }
        let (mut rows, pivots) = rref_rows(vectors.to_vec(), parent_dim);
        rows.truncate(pivots.len());
        IdealBasis { rows, pivots, parent_dim }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn parent_dim(&self) -> usize {
        self.parent_dim
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `x` minus its components along the echelon rows; zero at every pivot.
    pub fn reduce(&self, x: &[F]) -> Vec<F> {
        let mut v = x.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (vk, rk) in v.iter_mut().zip(row) {
                    *vk = vk.sub(&f.mul(rk));
                }
            }
        }
        v
    }

    pub fn contains(&self, x: &[F]) -> bool {
        self.reduce(x).iter().all(|c| c.is_zero())
    }

    pub fn contains_ideal(&self, other: &IdealBasis<F>) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// True when `m` maps the ideal into itself.
    pub fn is_invariant_under(&self, m: &ExactMatrix<F>) -> bool {
        self.rows.iter().all(|v| self.contains(&m.apply(v)))
    }

    /// Standard basis indices completing the pivots, in increasing order.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.parent_dim).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Smallest ideal containing `seeds`: span, multiply by every basis vector,
/// repeat until the dimension is stable.
pub fn ideal_closure<F: Field>(t: &AlgebraTable<F>, seeds: &[AlgebraElement<F>]) -> IdealBasis<F> {
    let n = t.dim();
    let mut ideal = IdealBasis::span(seeds, n);
    loop {
        let mut gens = ideal.rows.clone();
        for v in &ideal.rows {
            for i in 0..n {
                let w = t.mul(&t.basis(i), v);
                if !ideal.contains(&w) {
                    gens.push(w);
                }
            }
        }
        if gens.len() == ideal.rows.len() {
            return ideal;
        }
        ideal = IdealBasis::span(&gens, n);
    }
}

/// `m^k x_i - x_i` for every basis vector `x_i`.
pub fn fixed_point_defect<T: Ring>(
    t: &AlgebraTable<T>,
    m: &ExactMatrix<T>,
    k: u64,
) -> Result<Vec<AlgebraElement<T>>, IdealError> {
    if !t.is_automorphism(m) {
        return Err(IdealError::NotAutomorphism);
    }
    let mk = m.pow(k);
    Ok((0..t.dim())
        .map(|i| mk.column(i).iter().zip(t.basis(i)).map(|(a, b)| a.sub(&b)).collect())
        .collect())
}

/// Radical of the Frobenius form: the kernel of the Gram matrix.
pub fn radical<F: Field>(t: &AlgebraTable<F>) -> IdealBasis<F> {
    let kernel = kernel_of_rows(t.gram().rows(), t.dim());
    IdealBasis::span(&kernel, t.dim())
}

/// Exact rank of the Gram matrix; full rank is the simplicity proxy.
pub fn gram_rank<F: Field>(t: &AlgebraTable<F>) -> usize {
    t.gram_rank()
}

/// Quotient algebra on the standard basis vectors complementing the ideal's
/// pivots. The Gram matrix is the parent form restricted to those vectors,
/// which is the induced form exactly when the ideal lies in the radical.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub table: AlgebraTable<F>,
    pub ideal: IdealBasis<F>,
    /// Parent basis indices whose images form the quotient basis.
    pub representatives: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    /// Coordinates of `x + I` on the quotient basis.
    pub fn project(&self, x: &[F]) -> Vec<F> {
        let r = self.ideal.reduce(x);
        self.representatives.iter().map(|&i| r[i].clone()).collect()
    }

    /// Matrix induced on the quotient by an automorphism preserving the ideal.
    pub fn induced(&self, m: &ExactMatrix<F>) -> Result<ExactMatrix<F>, IdealError> {
        if !self.ideal.is_invariant_under(m) {
            return Err(IdealError::NotInvariant);
        }
        let cols: Vec<Vec<F>> = self.representatives.iter().map(|&j| self.project(&m.column(j))).collect();
        Ok(ExactMatrix::from_columns(&cols))
    }

    /// Table dump headed by a back-reference to the parent.
    pub fn dump(&self, parent: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "parent = {parent}");
        let _ = writeln!(
            s,
            "ideal = [{}]",
            self.ideal
                .vectors()
                .iter()
                .map(|v| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                .collect::<Vec<_>>()
                .join(", ")
        );
        s.push_str(&self.table.dump());
        s
    }
}

pub fn quotient<F: Field>(t: &AlgebraTable<F>, ideal: &IdealBasis<F>) -> Result<Quotient<F>, IdealError> {
    if ideal.dim() >= t.dim() {
        return Err(IdealError::ImproperIdeal);
    }
    let reps = ideal.complement();
    let labels: Vec<String> = reps.iter().map(|&i| format!("[{}]", t.labels()[i])).collect();
    let project = |x: &[F]| -> Vec<F> {
        let r = ideal.reduce(x);
        reps.iter().map(|&i| r[i].clone()).collect()
    };
    let products = reps
        .iter()
        .map(|&i| reps.iter().map(|&j| project(t.product_of_basis(i, j))).collect())
        .collect();
    let gram = ExactMatrix::from_fn(reps.len(), |r, c| t.gram().get(reps[r], reps[c]).clone());
    Ok(Quotient {
        table: AlgebraTable::from_parts(labels, products, gram),
        ideal: ideal.clone(),
        representatives: reps,
    })
}
