use crate::poly::UniPoly;
use crate::scalars::{rat, Field, Ring};

use super::matrix::{kernel_of_rows, rank_of_rows, ExactMatrix};

/// Characteristic polynomial `det(xI - m)`.
///
/// Uses Faddeev-LeVerrier when `1/k` embeds for all `k <= n`, otherwise the
/// division-free Berkowitz recurrence.
pub fn char_poly<T: Ring>(m: &ExactMatrix<T>) -> UniPoly<T> {
    faddeev_leverrier(m).unwrap_or_else(|| berkowitz(m))
}

/// Faddeev-LeVerrier; `None` when some `1/k` is not available in the domain.
pub fn faddeev_leverrier<T: Ring>(m: &ExactMatrix<T>) -> Option<UniPoly<T>> {
    let n = m.dim();
    let sample = m.sample();
    let mut coeffs = vec![sample.zero_like(); n + 1];
    coeffs[n] = sample.one_like();
    let id = ExactMatrix::identity(n, sample);
    let mut mk = ExactMatrix::zero(n, sample);
    for k in 1..=n {
        mk = m.mul(&mk).add(&id.scale(&coeffs[n + 1 - k]));
        let inv_k = sample.embed_rational(&rat(-1, k as i64)).ok()?;
        coeffs[n - k] = m.mul(&mk).trace().mul(&inv_k);
    }
    Some(UniPoly::new(coeffs))
}

/// Berkowitz recurrence over the leading principal submatrices; uses only
/// ring operations.
pub fn berkowitz<T: Ring>(m: &ExactMatrix<T>) -> UniPoly<T> {
    let n = m.dim();
    let sample = m.sample();
    // coefficients from the leading one downwards
    let mut v = vec![sample.one_like(), m.get(0, 0).neg()];
    for r in 1..n {
        let a_r = m.submatrix(&(0..r).collect::<Vec<_>>());
        let row: Vec<T> = (0..r).map(|j| m.get(r, j).clone()).collect();
        let mut col: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        let mut t = vec![sample.one_like(), m.get(r, r).neg()];
        for _ in 0..r {
            let dot = row.iter().zip(&col).fold(sample.zero_like(), |acc, (x, y)| acc.add(&x.mul(y)));
            t.push(dot.neg());
            col = a_r.apply(&col);
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = sample.zero_like();
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                acc = acc.add(&t[i - j].mul(vj));
            }
            next.push(acc);
        }
        v = next;
    }
    v.reverse();
    UniPoly::new(v)
}

/// Evaluates a polynomial at a matrix by Horner's rule.
pub fn eval_at_matrix<T: Ring>(f: &UniPoly<T>, m: &ExactMatrix<T>) -> ExactMatrix<T> {
    let n = m.dim();
    let id = ExactMatrix::identity(n, m.sample());
    let mut acc = ExactMatrix::zero(n, m.sample());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(m).add(&id.scale(c));
    }
    acc
}

/// Monic minimal polynomial of `m`: the lcm over basis vectors of the
/// least Krylov relation.
pub fn min_poly<T: Field>(m: &ExactMatrix<T>) -> UniPoly<T> {
    let n = m.dim();
    let sample = m.sample();
    let mut acc = UniPoly::constant(sample.one_like());
    for j in 0..n {
        let mut v: Vec<T> = (0..n).map(|i| if i == j { sample.one_like() } else { sample.zero_like() }).collect();
        if eval_at_matrix(&acc, m).apply(&v).iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut krylov = vec![v.clone()];
        loop {
            v = m.apply(&v);
            krylov.push(v.clone());
            let k = krylov.len();
            // n x k system whose columns are the Krylov vectors
            let rows: Vec<Vec<T>> = (0..n).map(|i| krylov.iter().map(|w| w[i].clone()).collect()).collect();
            if rank_of_rows(rows.clone(), k) < k {
                let rel = kernel_of_rows(rows, k).into_iter().next().expect("dependent columns have a kernel");
                acc = acc.lcm(&UniPoly::new(rel).monic());
                break;
            }
        }
    }
    acc.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Rational};

    fn q(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn trivial_char_polys() {
        let id = q(&[&[1, 0], &[0, 1]]);
        assert_eq!(char_poly(&id).to_string(), "x^2 - 2*x + 1");
        let swap = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&swap).to_string(), "x^2 - 1");
        assert_eq!(min_poly(&id).to_string(), "x - 1");
    }

    #[test]
    fn berkowitz_agrees_with_faddeev() {
        let m = q(&[&[2, -1, 0, 3], &[1, 0, 4, 1], &[0, 5, -2, 1], &[7, 1, 1, 1]]);
        assert_eq!(berkowitz(&m), faddeev_leverrier(&m).unwrap());
        assert!(eval_at_matrix(&char_poly(&m), &m).is_zero());
    }

    #[test]
    fn small_characteristic_falls_back() {
        let f = |x: i64| Fp::from_i64(x, 5).unwrap();
        let rows: Vec<Vec<Fp>> = (0..6).map(|i| (0..6).map(|j| f((i * 7 + j * j + 1) as i64)).collect()).collect();
        let m = ExactMatrix::from_rows(rows);
        assert!(faddeev_leverrier(&m).is_none());
        let p = char_poly(&m);
        assert_eq!(p.degree(), Some(6));
        assert!(eval_at_matrix(&p, &m).is_zero());
    }

    #[test]
    fn min_poly_of_projection() {
        let m = q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(min_poly(&m).to_string(), "x^2 - x");
        let j = q(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(min_poly(&j).to_string(), "x^2 - 4*x + 4");
    }

    fn square(entries: Vec<i64>) -> ExactMatrix<Rational> {
        let n = (entries.len() as f64).sqrt() as usize;
        ExactMatrix::from_fn(n, |i, j| rat(entries[i * n + j], 1))
    }

    fn matrix_strategy() -> impl proptest::strategy::Strategy<Value = ExactMatrix<Rational>> {
        use proptest::prelude::*;
        (1usize..=6).prop_flat_map(|n| prop::collection::vec(-5i64..=5, n * n)).prop_map(square)
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn cayley_hamilton(m in matrix_strategy()) {
            let p = char_poly(&m);
            proptest::prop_assert_eq!(p.degree(), Some(m.dim()));
            proptest::prop_assert!(eval_at_matrix(&p, &m).is_zero());
            proptest::prop_assert_eq!(berkowitz(&m), p);
        }

        #[test]
        fn min_poly_divides_char_poly(m in matrix_strategy()) {
            let p = char_poly(&m);
            let mp = min_poly(&m);
            proptest::prop_assert!(eval_at_matrix(&mp, &m).is_zero());
            proptest::prop_assert!(p.rem(&mp).unwrap().is_zero());
        }
    }
}
