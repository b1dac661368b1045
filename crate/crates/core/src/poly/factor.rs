//! Factorization of univariate rational polynomials into irreducibles
//! (Berlekamp-Zassenhaus: factor modulo a small prime, Hensel lift, recombine).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::UniPoly;
use crate::scalars::fp::{mul_mod, pow_mod};
use crate::scalars::{is_prime_u64, Rational};

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. Constants have no factors.
pub fn factor_rational(f: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(&f.monic()) {
        for h in factor_squarefree(&g) {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

/// True iff `f` has positive degree and no nontrivial factorization over Q.
pub fn is_irreducible(f: &UniPoly<Rational>) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(d) => {
            let fs = factor_rational(f);
            fs.len() == 1 && fs[0].1 == 1 && fs[0].0.degree() == Some(d)
        }
    }
}

/// Yun's algorithm: monic squarefree pieces `(g_i, i)` with `f = prod g_i^i`.
pub fn squarefree_decomposition(f: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = df.div_exact(&a0).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

type IntPoly = Vec<BigInt>;
type ModPoly = Vec<u64>;

fn factor_squarefree(f: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let deg = f.degree().unwrap();
    if deg <= 1 {
        return vec![f.monic()];
    }
    let big = f.primitive_integer();
    let (p, modular) = choose_prime(&big);
    if modular.len() == 1 {
        return vec![f.monic()];
    }
    let bound = coefficient_bound(&big);
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= bound {
        modulus *= p;
        k += 1;
    }
    let lifted = multifactor_hensel(&big, &modular, p, k);
    recombine(&big, lifted, &modulus)
        .into_iter()
        .map(|g| int_to_rational(&g).monic())
        .collect()
}

fn int_to_rational(g: &IntPoly) -> UniPoly<Rational> {
    UniPoly::new(g.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// `2 * |lc| * 2^n * ||f||_2`, rounded up.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let lc = f.last().unwrap().abs();
    BigInt::from(2) * lc * (BigInt::one() << (f.len() - 1)) * norm
}

fn reduce_mod_p(f: &IntPoly, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    let mut v: ModPoly = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim(&mut v);
    v
}

/// Picks a small odd prime keeping `f` squarefree of full degree, preferring
/// the fewest modular factors. Returns the prime and the monic factors mod p.
fn choose_prime(f: &IntPoly) -> (u64, Vec<ModPoly>) {
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 6 {
        p += 2;
        if !is_prime_u64(p) {
            continue;
        }
        let fp = reduce_mod_p(f, p);
        if fp.len() != f.len() {
            continue;
        }
        let dfp = mp_derivative(&fp, p);
        if mp_gcd(&fp, &dfp, p).len() != 1 {
            continue;
        }
        tried += 1;
        let factors = factor_mod_p(&mp_monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    best.expect("some prime keeps the polynomial squarefree")
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x]

fn trim(v: &mut ModPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mp_sub(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out: ModPoly = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn mp_mul(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn mp_divrem(a: &ModPoly, d: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    assert!(!d.is_empty());
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.clone());
    }
    let inv = pow_mod(*d.last().unwrap(), p - 2, p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = mul_mod(r[k + dd], inv, p);
        if c == 0 {
            continue;
        }
        for (j, &dc) in d.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mul_mod(c, dc, p)) % p;
        }
        q[k] = c;
    }
    r.truncate(dd);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn mp_rem(a: &ModPoly, d: &ModPoly, p: u64) -> ModPoly {
    mp_divrem(a, d, p).1
}

fn mp_monic(a: &ModPoly, p: u64) -> ModPoly {
    let inv = pow_mod(*a.last().unwrap(), p - 2, p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn mp_gcd(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = mp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        mp_monic(&a, p)
    }
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
fn mp_xgcd(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (ModPoly, ModPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = mp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = mp_sub(&s0, &mp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = mp_sub(&t0, &mp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = pow_mod(*r0.last().unwrap(), p - 2, p);
    let sc = |v: &ModPoly| -> ModPoly {
        let mut o: ModPoly = v.iter().map(|&c| mul_mod(c, inv, p)).collect();
        trim(&mut o);
        o
    };
    (sc(&r0), sc(&s0), sc(&t0))
}

fn mp_derivative(a: &ModPoly, p: u64) -> ModPoly {
    let mut out: ModPoly =
        a.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % p, p)).collect();
    trim(&mut out);
    out
}

fn mp_powmod(base: &ModPoly, e: &BigUint, m: &ModPoly, p: u64) -> ModPoly {
    let mut acc: ModPoly = vec![1];
    let base = mp_rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = mp_rem(&mp_mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = mp_rem(&mp_mul(&acc, &base, p), m, p);
        }
    }
    acc
}

/// Monic irreducible factors of a monic squarefree polynomial over F_p, p odd.
fn factor_mod_p(f: &ModPoly, p: u64) -> Vec<ModPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: ModPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            out.push(rest.clone());
            break;
        }
        h = mp_powmod(&h, &BigUint::from(p), &rest, p);
        let g = mp_gcd(&mp_sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            rest = mp_divrem(&rest, &g, p).0;
            h = mp_rem(&h, &rest, p);
        }
        d += 1;
    }
    out.sort();
    out
}

/// Distinct roots in F_p (p odd) of a rational polynomial, in increasing
/// order; the leading coefficient must stay nonzero modulo p.
pub fn roots_mod_p(f: &UniPoly<Rational>, p: u64) -> Vec<u64> {
    let g = reduce_mod_p(&f.primitive_integer(), p);
    if g.len() < 2 || g.len() != f.coeffs().len() {
        return Vec::new();
    }
    let g = mp_monic(&g, p);
    let x: ModPoly = vec![0, 1];
    let h = mp_powmod(&x, &BigUint::from(p), &g, p);
    let linear = mp_gcd(&mp_sub(&h, &x, p), &g, p);
    if linear.len() < 2 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    equal_degree_split(&linear, 1, p, &mut rng, &mut out);
    let mut roots: Vec<u64> = out.iter().map(|l| (p - l[0]) % p).collect();
    roots.sort_unstable();
    roots
}

fn equal_degree_split(f: &ModPoly, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.clone());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let mut a: ModPoly = (0..n).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = mp_sub(&mp_powmod(&a, &e, f, p), &vec![1], p);
        let g = mp_gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = mp_divrem(f, &g, p).0;
            equal_degree_split(&g, d, p, rng, out);
            equal_degree_split(&mp_monic(&q, p), d, p, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z

fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ip_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
        })
        .collect()
}

fn ip_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    let mut out: IntPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn to_int(a: &ModPoly) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `target = g * h (mod p)` with `g` monic to a factorization modulo
/// `p^k`. Returns the lifted `(g, h)` reduced modulo `p^k`.
fn hensel_pair(target: &IntPoly, g0: &ModPoly, h0: &ModPoly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (one, _, t) = mp_xgcd(g0, h0, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut g = to_int(g0);
    let mut h = to_int(h0);
    let mut m = pb.clone();
    for _ in 1..k {
        let err = ip_sub(target, &ip_mul(&g, &h));
        let e: IntPoly = err.iter().map(|c| {
            debug_assert!((c % &m).is_zero());
            c / &m
        }).collect();
        let mut e_p: ModPoly = e.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
        trim(&mut e_p);
        let dg = mp_rem(&mp_mul(&t, &e_p, p), g0, p);
        let num = mp_sub(&e_p, &mp_mul(h0, &dg, p), p);
        let (dh, r) = mp_divrem(&num, g0, p);
        debug_assert!(r.is_empty());
        let scale = |v: &ModPoly| -> IntPoly { v.iter().map(|&c| BigInt::from(c) * &m).collect() };
        g = add_int(&g, &scale(&dg));
        h = add_int(&h, &scale(&dh));
        m *= &pb;
        g = ip_mod(&g, &m);
        h = ip_mod(&h, &m);
    }
    (g, h)
}

fn add_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect()
}

/// Lifts `f = lc * prod factors (mod p)` to modulus `p^k`; the returned
/// factors are monic modulo `p^k`.
fn multifactor_hensel(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let modulus = BigInt::from(p).pow(k);
    let mut out = Vec::new();
    let mut target = ip_mod(f, &modulus);
    for i in 0..factors.len() - 1 {
        let g0 = &factors[i];
        let h0 = reduce_mod_p(&target, p);
        let h0 = mp_divrem(&h0, g0, p).0;
        let (g, h) = hensel_pair(&target, g0, &h0, p, k);
        out.push(g);
        target = h;
    }
    // the last cofactor carries the leading coefficient; make it monic
    let lc = target.iter().rev().find(|c| !c.is_zero()).cloned().unwrap();
    let inv = mod_inverse(&lc, &modulus);
    out.push(ip_mod(&target.iter().map(|c| c * &inv).collect(), &modulus));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible modulo p^k");
    e.x.mod_floor(m)
}

fn content(f: &IntPoly) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(f: &IntPoly) -> IntPoly {
    let c = content(f);
    let mut out: IntPoly = f.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        out = out.into_iter().map(|x| -x).collect();
    }
    out
}

/// Exact division over Z; `None` if `d` does not divide `f`.
fn int_div_exact(f: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    let fr = int_to_rational(f);
    let dr = int_to_rational(d);
    let q = fr.div_exact(&dr)?;
    q.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<IntPoly>>()
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut f = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut progress = false;
        for subset in subsets(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut cand: IntPoly = vec![lc];
            for &i in &subset {
                cand = ip_mod(&ip_mul(&cand, &lifted[i]), modulus);
            }
            let cand = primitive(&symmetric(&cand, modulus));
            if let Some(q) = int_div_exact(&f, &cand) {
                found.push(cand);
                f = primitive(&q);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                progress = true;
                break;
            }
        }
        if !progress {
            size += 1;
        }
    }
    found.push(f);
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UniPoly<Rational> {
        s.parse().unwrap()
    }

    #[test]
    fn splits_product_of_quadratics() {
        // (x - 7/16)^2 - 45/256 and (x - 1/16)^2 - 45/256
        let a = p("x^2 - 7/8*x + 1/64");
        let b = p("x^2 - 1/8*x - 11/64");
        let fs = factor_rational(&a.mul(&b));
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(a, 1)) && fs.contains(&(b, 1)));
    }

    #[test]
    fn irreducible_examples() {
        assert!(is_irreducible(&p("x^2 - 5")));
        assert!(!is_irreducible(&p("x^2 - 4")));
        assert!(is_irreducible(&p("x^3 - 3/8*x^2 - 9/32*x + 13/512")));
        assert!(is_irreducible(&p("x^4 - 10*x^2 + 1")));
        assert!(!is_irreducible(&p("x^4 + 4")));
    }

    #[test]
    fn product_of_cubics_and_multiplicities() {
        let c1 = p("x^3 - 3/8*x^2 - 9/32*x + 13/512");
        let c2 = p("x^3 - 9/8*x^2 + 3/32*x + 43/512");
        let l = p("x - 1/4");
        let f = c1.mul(&c2).mul(&l).mul(&l);
        let fs = factor_rational(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0], (l, 2));
        assert!(fs.contains(&(c1, 1)) && fs.contains(&(c2, 1)));
    }

    #[test]
    fn swinnerton_dyer_like_needs_recombination() {
        // x^4 - 10x^2 + 1 splits into quadratics modulo every prime
        let f = p("x^4 - 10*x^2 + 1");
        assert_eq!(factor_rational(&f), vec![(f.clone(), 1)]);
    }
}
