//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Four criteria contain a printed value that disagrees with the exact
//! computation. They are run unchanged and must fail on exactly the
//! documented checks; any other failure, or any of these starting to
//! pass, fails the test.

use std::collections::BTreeMap;
use std::io::Write;

use pcaxial::algebra::basis::{A, B, C};
use pcaxial::algebra::{universal, ParameterPoint};
use pcaxial::ideals::{ideal_closure, quotient};
use pcaxial::linalg::{char_poly, element_order, eval_at_matrix, min_poly, parse_dump, ExactMatrix, OrderOutcome};
use pcaxial::poly::ParamPoly;
use pcaxial::reference;
use pcaxial::repro::{repro, ReproOptions, ReproReport};
use pcaxial::scalars::{rat, Fp, Rational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    failed: Vec<String>,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[ReproReport]) -> Self {
        let failed: Vec<String> =
            reports.iter().flat_map(|r| r.failed().into_iter().map(|c| format!("{}: {c}", r.item))).collect();
        let detail = reports.iter().map(|r| format!("{} {}", r.item, if r.pass() { "ok" } else { "mismatch" })).collect::<Vec<_>>().join(", ");
        Outcome { pass: failed.is_empty(), failed, detail }
    }

    fn from_checks(checks: Vec<(&str, bool)>) -> Self {
        let failed: Vec<String> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.to_string()).collect();
        Outcome { pass: failed.is_empty(), detail: format!("{} checks", checks.len()), failed }
    }
}

fn items(names: &[&str]) -> Outcome {
    let opts = ReproOptions { extended: false };
    let reports: Vec<ReproReport> = names.iter().map(|n| repro(n, &opts).expect("known repro item")).collect();
    Outcome::from_reports(&reports)
}

fn printed(s: &str) -> ExactMatrix<ParamPoly> {
    parse_dump(s, |x| x.parse::<ParamPoly>()).expect("reference matrices parse")
}

fn golden_matrices() -> Outcome {
    let t = universal();
    let tau = |i| t.miyamoto_basis(i).expect("basis axes are axes");
    let sub = t.subtable(&[A, B, pcaxial::algebra::basis::AB]).expect("a, b, ab span a subalgebra");
    let two = sub.miyamoto_basis(0).unwrap().mul(&sub.miyamoto_basis(1).unwrap());
    Outcome::from_checks(vec![
        ("tau_a equals print", tau(A) == printed(reference::TAU_A)),
        ("tau_b equals print", tau(B) == printed(reference::TAU_B)),
        ("tau_c equals print", tau(C) == printed(reference::TAU_C)),
        ("3x3 tau_ab equals print", two == printed(reference::TAU_AB_3X3)),
    ])
}

fn random_rational_point(rng: &mut ChaCha8Rng) -> [Rational; 4] {
    std::array::from_fn(|_| rat(rng.gen_range(-30..30), rng.gen_range(1..12)))
}

/// Randomized invariants on a fixed seed, independent of the unit-test proptests.
fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let t = universal();
    let mut identities = t.trilinear_defects().is_empty() && t.frobenius_defects().is_empty();
    let mut fusion = true;
    for _ in 0..8 {
        let s = t.specialize(&random_rational_point(&mut rng)).unwrap();
        identities &= s.trilinear_defects().is_empty() && s.frobenius_defects().is_empty();
        for axis in [A, B, C] {
            let tau = s.miyamoto_basis(axis).unwrap();
            fusion &= tau.mul(&tau).is_identity() && s.is_automorphism(&tau) && s.preserves_form(&tau);
        }
    }

    let mut cayley = true;
    let mut palindromic = true;
    for n in 1..=6 {
        let m = ExactMatrix::from_rows(
            (0..n).map(|_| (0..n).map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..4))).collect()).collect(),
        );
        let p = char_poly(&m);
        let mp = min_poly(&m);
        cayley &= eval_at_matrix(&p, &m).is_zero() && p.rem(&mp).unwrap().is_zero();
    }
    let cp = char_poly(&t.miyamoto_basis(A).unwrap().mul(&t.miyamoto_basis(B).unwrap()));
    let c = cp.coeffs();
    for k in 0..c.len() {
        palindromic &= c[k] == c[c.len() - 1 - k];
    }

    let mut invariance = true;
    let mut divisibility = true;
    for _ in 0..12 {
        let p = [5u64, 7, 11, 13][rng.gen_range(0..4)];
        let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(0..p as i64));
        let s = ParameterPoint::prime_field(p, v).unwrap().specialize(universal()).unwrap();
        let one = Fp::new(1, p).unwrap();
        let seed: Vec<_> = (0..8).map(|_| pcaxial::scalars::Scalar::Fp(one.from_int_like(rng.gen_range(0..p as i64)))).collect();
        let ideal = ideal_closure(&s, &[seed]);
        let taus: Vec<_> = (0..3).map(|i| s.miyamoto_basis(i).unwrap()).collect();
        invariance &= taus.iter().all(|m| ideal.is_invariant_under(m));
        if ideal.dim() < s.dim() {
            let q = quotient(&s, &ideal).unwrap();
            let m = taus[0].mul(&taus[1]);
            if let (Ok(OrderOutcome::Order(n)), Ok(OrderOutcome::Order(k))) =
                (element_order(&m, 10_000), element_order(&q.induced(&m).unwrap(), 10_000))
            {
                divisibility &= n % k == 0;
            }
        }
    }

    let mut out = Outcome::from_checks(vec![
        ("trilinear and Frobenius identities", identities),
        ("fusion-law involutions", fusion),
        ("Cayley-Hamilton and minimal polynomial division", cayley),
        ("palindromic char poly", palindromic),
        ("ideals invariant under tau", invariance),
        ("quotient order divides parent order", divisibility),
    ]);
    let columns = items(&["stmt-columns", "stmt-orders"]);
    out.pass &= columns.pass;
    out.failed.extend(columns.failed);
    out.detail = format!("{}; {}", out.detail, columns.detail);
    out
}

fn known_failures() -> BTreeMap<u32, Vec<&'static str>> {
    BTreeMap::from([
        (2, vec!["prop2-charpoly: equals printed polynomial"]),
        (5, vec!["prop3-ideal: ab = 0 = c gives dim 6"]),
        (6, vec!["stmt-psi: equals printed quintic"]),
        (11, vec!["example-sl85: 4-generator enumeration exceeds"]),
    ])
}

#[test]
fn acceptance_criteria() {
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "golden involution matrices", Box::new(golden_matrices)),
        (2, "char poly of tau_a tau_b", Box::new(|| items(&["prop2-charpoly"]))),
        (3, "order table over number fields", Box::new(|| items(&["prop1"]))),
        (4, "F_7 and F_11 order tables", Box::new(|| items(&["remark-f7", "remark-f11"]))),
        (5, "fixed-point ideal and quotient", Box::new(|| items(&["prop3-ideal"]))),
        (6, "conjugate product minimal polynomial", Box::new(|| items(&["stmt-psi"]))),
        (7, "quotient group order bound", Box::new(|| items(&["prop4-quotient"]))),
        (8, "A5 obstruction", Box::new(|| items(&["a5-obstruction"]))),
        (9, "PSL(2,7) over Q", Box::new(|| items(&["psl27"]))),
        (10, "characteristic 5 group table", Box::new(|| items(&["prop6-char5"]))),
        (11, "fourth axis over F_5", Box::new(|| items(&["example-sl85"]))),
        (12, "PSL(3,q) and PSU(3,q) rows", Box::new(|| items(&["stmt-psl3q"]))),
        (13, "property suites", Box::new(property_suites)),
    ];
    let known = known_failures();
    let mut unexpected = Vec::new();
    for (n, name, run) in &criteria {
        let out = run();
        // Written to the raw handle so the lines survive test output capture.
        let mut line = format!("criterion {n:>2} {}: {name} ({})\n", if out.pass { "PASS" } else { "FAIL" }, out.detail);
        for f in &out.failed {
            line.push_str(&format!("    failed check: {f}\n"));
        }
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
        let expected: Vec<String> = known.get(n).map(|v| v.iter().map(|s| s.to_string()).collect()).unwrap_or_default();
        if out.failed != expected {
            unexpected.push(format!("criterion {n}: failed {:?}, documented {:?}", out.failed, expected));
        }
    }
    assert!(unexpected.is_empty(), "{}", unexpected.join("\n"));
}
