use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::scalars::{rat, Rational};
use crate::scalars::rational::sign;

/// Open interval `(lower, upper)` containing exactly one root of a
/// reference polynomial, which is nonzero at both endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct IsolatingInterval {
    #[serde(serialize_with = "crate::util::ser_display")]
    pub lower: Rational,
    #[serde(serialize_with = "crate::util::ser_display")]
    pub upper: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower < x && x < &self.upper
    }
}

/// Sturm chain of `f`: f, f', then negated remainders.
pub fn sturm_chain(f: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[UniPoly<Rational>], x: &Rational) -> usize {
    variations(chain.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_infinity(chain: &[UniPoly<Rational>], positive: bool) -> usize {
    variations(chain.iter().map(|p| {
        let s = sign(p.lead().unwrap());
        let odd = p.degree().unwrap() % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }))
}

/// Number of distinct real roots of `f`.
pub fn count_real_roots(f: &UniPoly<Rational>) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true)
}

/// Number of distinct roots of `f` in the half-open interval `(a, b]`.
pub fn count_roots_between(f: &UniPoly<Rational>, a: &Rational, b: &Rational) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    variations_at(&chain, a) - variations_at(&chain, b)
}

/// Cauchy bound: every real root lies strictly inside `(-B, B)`.
pub fn root_bound(f: &UniPoly<Rational>) -> Rational {
    let lead = f.lead().expect("nonzero").abs();
    let mut m = Rational::zero();
    for c in &f.coeffs()[..f.coeffs().len() - 1] {
        let q = c.abs() / &lead;
        if q > m {
            m = q;
        }
    }
    m + Rational::one() + Rational::one()
}

/// One isolating interval per distinct real root, in increasing order.
/// Intervals are refined until narrower than `max_width`.
pub fn isolate_real_roots_width(f: &UniPoly<Rational>, max_width: &Rational) -> Vec<IsolatingInterval> {
    assert!(!f.is_zero(), "cannot isolate the roots of the zero polynomial");
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let g = f.squarefree_part();
    let chain = sturm_chain(&g);
    let bound = root_bound(&g);
    let mut out = Vec::new();
    // stack of (lo, hi, roots in (lo, hi]); endpoints are never roots
    let lo = -bound.clone();
    let hi = bound;
    let n = variations_at(&chain, &lo) - variations_at(&chain, &hi);
    let mut stack = vec![(lo, hi, n)];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(refine(&g, IsolatingInterval { lower: lo, upper: hi }, max_width)),
            _ => {
                let mid = split_point(&g, &lo, &hi);
                let left = variations_at(&chain, &lo) - variations_at(&chain, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.lower.cmp(&b.lower));
    out
}

/// Intervals refined to width below 10^-6.
pub fn sturm_isolate(f: &UniPoly<Rational>) -> Vec<IsolatingInterval> {
    isolate_real_roots_width(f, &rat(1, 1_000_000))
}

/// Midpoint of `(lo, hi)`, nudged off any root of `g`.
fn split_point(g: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut mid = (lo + hi) / &two;
    let mut step = (hi - lo) / Rational::from_integer(7.into());
    while Zero::is_zero(&g.eval(&mid)) {
        mid = &mid + &step;
        step = step / &two;
    }
    mid
}

/// Bisects an isolating interval of a squarefree polynomial.
pub fn refine(g: &UniPoly<Rational>, iv: IsolatingInterval, max_width: &Rational) -> IsolatingInterval {
    let mut lo = iv.lower;
    let mut hi = iv.upper;
    let mut s_lo = sign(&g.eval(&lo));
    debug_assert!(s_lo != 0 && sign(&g.eval(&hi)) == -s_lo);
    while &(&hi - &lo) >= max_width {
        let mid = split_point(g, &lo, &hi);
        let s = sign(&g.eval(&mid));
        if s == s_lo {
            lo = mid;
            s_lo = s;
        } else {
            hi = mid;
        }
    }
    IsolatingInterval { lower: lo, upper: hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UniPoly<Rational> {
        s.parse().unwrap()
    }

    #[test]
    fn no_real_roots() {
        assert!(sturm_isolate(&p("x^2 + 1")).is_empty());
    }

    #[test]
    fn quadratic_two_roots() {
        let iv = sturm_isolate(&p("32*x^2 - 16*x - 7"));
        assert_eq!(iv.len(), 2);
        for i in &iv {
            assert!(i.width() < rat(1, 1_000_000));
        }
    }

    #[test]
    fn multiple_roots_counted_once() {
        let f = p("x - 2").mul(&p("x - 2")).mul(&p("x + 1"));
        assert_eq!(count_real_roots(&f), 2);
        let iv = sturm_isolate(&f);
        assert!(iv[0].contains(&rat(-1, 1)) && iv[1].contains(&rat(2, 1)));
    }

    #[test]
    fn rational_root_on_bisection_point() {
        // 0 is the first midpoint of the symmetric bounding interval
        let iv = sturm_isolate(&p("x^3 - x"));
        assert_eq!(iv.len(), 3);
        assert!(iv[1].contains(&rat(0, 1)));
    }
}
