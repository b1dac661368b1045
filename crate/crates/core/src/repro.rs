//! Regeneration of each printed claim as a list of named pass/fail checks.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{basis::*, universal, AlgebraError, AlgebraTable, ParameterPoint};
use crate::group::{self, axis_involutions, bfs_closure, catalog, matrix_order, Analysis, GroupError};
use crate::ideals::{self, IdealError};
use crate::linalg::{char_poly, element_order, min_poly, parse_dump, rank_of_rows, ExactMatrix, OrderOutcome};
use crate::poly::{factor_rational, univariate_gcd_all, Param, ParamPoly, RatFunc, UniPoly};
use crate::reference::{self, Scaled};
use crate::roots::{self, verify_order_at, RootsError, TauWord};
use crate::scalars::{rat, Domain, NfElem, NumberField, Rational, Ring, Scalar, ScalarError};

pub const ITEMS: [&str; 14] = [
    "prop1",
    "remark-f7",
    "remark-f11",
    "prop2-charpoly",
    "stmt-columns",
    "prop3-ideal",
    "stmt-orders",
    "prop4-quotient",
    "stmt-psi",
    "a5-obstruction",
    "psl27",
    "prop6-char5",
    "example-sl85",
    "stmt-psl3q",
];

#[derive(Debug, thiserror::Error)]
pub enum ReproError {
    #[error("unknown repro item {0:?}")]
    UnknownItem(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub item: String,
    pub checks: Vec<Check>,
}

impl ReproReport {
    fn new(item: &str) -> Self {
        ReproReport { item: item.to_string(), checks: Vec::new() }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), pass, detail: detail.into() });
    }

    /// Conjunction of all checks.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.item, if self.pass() { "PASS" } else { "FAIL" });
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {} {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct ReproOptions {
    /// Enables the large enumerations (PSU(3,7)).
    pub extended: bool,
}

impl Default for ReproOptions {
    fn default() -> Self {
        ReproOptions { extended: std::env::var("PCAXIAL_EXTENDED").is_ok_and(|v| v == "1") }
    }
}

/// Cutoff used for PSU(3,7) when extended runs are enabled.
pub const EXTENDED_CUTOFF: usize = 6_000_000;

pub fn repro(item: &str, opts: &ReproOptions) -> Result<ReproReport, ReproError> {
    match item {
        "prop1" => prop1(),
        "remark-f7" => finite_field_table(item, 7, &roots::F7_ORDERS),
        "remark-f11" => finite_field_table(item, 11, &roots::F11_ORDERS),
        "prop2-charpoly" => prop2_charpoly(),
        "stmt-columns" => stmt_columns(),
        "prop3-ideal" => prop3_ideal(),
        "stmt-orders" => stmt_orders(),
        "prop4-quotient" => prop4_quotient(),
        "stmt-psi" => stmt_psi(),
        "a5-obstruction" => a5_obstruction(),
        "psl27" => psl27(),
        "prop6-char5" => prop6_char5(),
        "example-sl85" => example_sl85(),
        "stmt-psl3q" => stmt_psl3q(opts),
        other => Err(ReproError::UnknownItem(other.to_string())),
    }
}

fn scaled(s: &Scaled) -> ParamPoly {
    let p: ParamPoly = s.1.parse().expect("reference polynomial parses");
    p.mul(&ParamPoly::constant(rat(s.0 .0, s.0 .1)))
}

fn alpha_only(p: &ParamPoly) -> bool {
    [Param::Beta, Param::Gamma, Param::Psi].iter().all(|&v| p.degree_in(v) == 0)
}

fn tau_ab<T: Ring>(t: &AlgebraTable<T>) -> Result<ExactMatrix<T>, AlgebraError> {
    Ok(t.miyamoto_basis(A)?.mul(&t.miyamoto_basis(B)?))
}

fn sqrt5_field() -> Arc<NumberField> {
    Arc::new(NumberField::parse("t^2-5").expect("t^2-5 is irreducible"))
}

fn nf(k: &Arc<NumberField>, c: [(i64, i64); 2]) -> NfElem {
    k.element(&[rat(c[0].0, c[0].1), rat(c[1].0, c[1].1)]).expect("two coordinates")
}

fn q_point(v: [Rational; 4]) -> ParameterPoint {
    ParameterPoint::new(Domain::Rationals, v.map(Scalar::Q)).expect("rational point")
}

/// Orders of tau_a tau_b, tau_b tau_c, tau_a tau_c and tau_a tau_b^{tau_c}.
fn product_orders(t: &[ExactMatrix<Scalar>], cutoff: u64) -> [OrderOutcome; 4] {
    [
        matrix_order(&t[0].mul(&t[1]), cutoff),
        matrix_order(&t[1].mul(&t[2]), cutoff),
        matrix_order(&t[0].mul(&t[2]), cutoff),
        matrix_order(&t[0].mul(&t[2]).mul(&t[1]).mul(&t[2]), cutoff),
    ]
}

fn fmt_orders(o: &[OrderOutcome]) -> String {
    o.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn prop1() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("prop1");
    for row in roots::PROP1_ROWS {
        let sol = roots::solve_order_2gen(row.order)?;
        let mut ok = true;
        let mut detail = Vec::new();
        for v in row.values {
            for (f, _) in factor_rational(&v.polynomial()) {
                let hit = sol.factors.iter().find(|(g, _)| *g == f).map(|(_, o)| *o);
                ok &= hit == Some(OrderOutcome::Order(row.order));
                detail.push(format!("{} -> {}", f.to_string_var("alpha"), hit.map_or("missing".into(), |o| o.to_string())));
            }
        }
        r.check(&format!("k={}", row.order), ok, detail.join("; "));
    }
    Ok(r)
}

fn finite_field_table(item: &str, p: u64, printed: &[u64]) -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new(item);
    let got: Vec<OrderOutcome> = roots::finite_field_orders(p)?;
    let want: Vec<OrderOutcome> = printed.iter().map(|&k| OrderOutcome::Order(k)).collect();
    r.check(&format!("F_{p} orders"), got == want, format!("derived {} printed {}", fmt_orders(&got), fmt_orders(&want)));
    Ok(r)
}

fn prop2_charpoly() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("prop2-charpoly");
    let m = tau_ab(universal())?;
    let p = char_poly(&m);
    let derived = p.coeffs().to_vec();
    let printed: Vec<ParamPoly> = reference::CHARPOLY_TAU_AB.iter().map(scaled).collect();
    let diffs: Vec<String> = (0..9)
        .filter(|&k| derived.get(k) != Some(&printed[k]))
        .map(|k| format!("x^{k}: derived {} printed {}", derived[k], printed[k]))
        .collect();
    r.check("equals printed polynomial", diffs.is_empty(), diffs.join("; "));
    let mut rev = derived.clone();
    rev.reverse();
    r.check("palindromic", derived == rev, "");
    r.check("lies in Q[alpha]", derived.iter().all(alpha_only), "");
    // the x^7 coefficient is minus the trace of the product
    r.check("x^7 coefficient is -trace", derived[7] == m.trace().neg(), format!("trace {}", m.trace()));
    Ok(r)
}

fn stmt_columns() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("stmt-columns");
    let m = tau_ab(universal())?;
    let inside = [A, B, AB];
    let outside = [C, BC, AC, A_BC, B_AC];
    let mut power = m.clone();
    for n in 1..=6 {
        let mut zeros = true;
        let mut in_alpha = true;
        for &j in &inside {
            for i in 0..8 {
                let e = power.get(i, j);
                if outside.contains(&i) {
                    zeros &= e.is_zero();
                } else {
                    in_alpha &= alpha_only(e);
                }
            }
        }
        let block = outside.iter().all(|&i| outside.iter().all(|&j| alpha_only(power.get(i, j))));
        r.check(&format!("n={n}"), zeros && in_alpha && block, format!("zeros {zeros} alpha-only {in_alpha} block {block}"));
        power = power.mul(&m);
    }
    Ok(r)
}

fn prop3_ideal() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("prop3-ideal");
    let m = tau_ab(universal())?;
    let sq = m.pow(2);
    let f1 = sq.get(0, 0).sub(&ParamPoly::one());
    let f2 = sq.get(0, 1).clone();
    let p1 = scaled(&reference::F1).sub(&ParamPoly::one());
    let p2 = scaled(&reference::F2);
    r.check("f1 equals print", f1 == p1, format!("{f1}"));
    r.check("f2 equals print", f2 == p2, format!("{f2}"));
    let g = univariate_gcd_all([f1, f2].into_iter(), Param::Alpha).expect("univariate in alpha");
    let quarter = UniPoly::new(vec![rat(-1, 4), rat(1, 1)]);
    r.check("common factor alpha - 1/4", g == quarter, g.to_string_var("alpha"));
    let none = [None, None, None, None];
    let o8 = verify_order_at(&quarter, Param::Alpha, TauWord::UniversalAB, &none, 24)?;
    r.check("order 4 at alpha = 1/4", o8 == OrderOutcome::Order(4), o8.to_string());

    let t = universal().substitute(&[Some(rat(1, 4)), None, None, None]);
    let defects = ideals::fixed_point_defect(&t, &tau_ab(&t)?, 2)?;
    let printed = parse_dump(reference::DEFECT_X9, |s| s.parse::<ParamPoly>())?;
    let nine = ParamPoly::constant(rat(9, 1));
    let same = defects
        .iter()
        .enumerate()
        .all(|(i, d)| d.iter().map(|x| x.mul(&nine)).collect::<Vec<_>>() == printed.row(i));
    r.check("defect matrix x9 equals print", same, "");
    let tail: Vec<Vec<Rational>> = (0..8)
        .map(|i| (4..8).map(|j| printed.get(i, j).constant_value().unwrap_or_else(|| rat(0, 1))).collect())
        .collect();
    let echelon: Vec<Vec<Rational>> =
        reference::DEFECT_ECHELON.iter().map(|row| row.iter().map(|&x| rat(x, 1)).collect()).collect();
    let rank = rank_of_rows(tail.clone(), 4);
    let joint = rank_of_rows([tail, echelon].concat(), 4);
    r.check("echelon rank of last four columns", rank == 4 && joint == 4, format!("rank {rank}, with printed echelon {joint}"));

    let t = universal().specialize(&[rat(1, 4), rat(1, 1), rat(1, 4), rat(1, 4)])?;
    let tab = tau_ab(&t)?;
    let ideal = ideals::ideal_closure(&t, &ideals::fixed_point_defect(&t, &tab, 2)?);
    r.check("dim I = 4", ideal.dim() == 4, ideal.dim().to_string());
    let q = ideals::quotient(&t, &ideal)?;
    let oq = element_order(&q.induced(&tab)?, 100).unwrap_or(OrderOutcome::Exceeded(100));
    r.check("tau_ab has order 2 on A/I", oq == OrderOutcome::Order(2), oq.to_string());
    let b_minus_c: Vec<Rational> = t.basis(B).iter().zip(t.basis(C)).map(|(x, y)| x - y).collect();
    let j5 = ideals::ideal_closure(&t, &[ideal.vectors().to_vec(), vec![b_minus_c]].concat());
    r.check("b = c gives dim 5 containing I", j5.dim() == 5 && j5.contains_ideal(&ideal), j5.dim().to_string());
    let j6 = ideals::ideal_closure(&t, &[ideal.vectors().to_vec(), vec![t.basis(AB), t.basis(C)]].concat());
    r.check("ab = 0 = c gives dim 6", j6.dim() == 6, format!("derived dim {}", j6.dim()));
    Ok(r)
}

fn stmt_orders() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("stmt-orders");
    let none = [None, None, None, None];
    let lin = |c: Rational| UniPoly::new(vec![-c, rat(1, 1)]);
    let cases: [(u64, UniPoly<Rational>, &str); 5] = [
        (3, lin(rat(-1, 8)), "-1/8"),
        (4, lin(rat(1, 4)), "1/4"),
        (5, UniPoly::parse_var("x^2 - 1/8*x - 11/64", "x")?, "1/16 +- 3 sqrt5/16"),
        (6, lin(rat(5, 8)), "5/8"),
        (10, UniPoly::parse_var("x^2 - 7/8*x + 1/64", "x")?, "7/16 +- 3 sqrt5/16"),
    ];
    for (k, f, label) in cases {
        let o = verify_order_at(&f, Param::Alpha, TauWord::UniversalAB, &none, 24)?;
        r.check(&format!("alpha = {label} divides {k}"), o.divides(k), o.to_string());
    }
    Ok(r)
}

fn prop4_quotient() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("prop4-quotient");
    for (k, psi) in [(3u64, rat(5, 32)), (4, rat(-1, 8))] {
        let e = rat(-1, 8);
        let point = q_point([e.clone(), e.clone(), e, psi.clone()]);
        let t = axis_involutions(&point)?;
        let o = product_orders(&t, 100);
        let report = bfs_closure(&t, 100_000, &Analysis::order_only())?;
        let n = report.order.unwrap_or(0);
        r.check(
            &format!("psi = {psi}: |G| divides {}", 6 * k * k),
            o[3].divides(k) && n > 0 && (6 * k * k) % n == 0,
            format!("orders {} group {}", fmt_orders(&o), report.outcome()),
        );
    }
    Ok(r)
}

/// Minimal polynomial of `tau_a tau_b^{tau_c}` over Q(psi) at alpha = beta = gamma = -1/8.
pub fn conjugate_min_poly() -> Result<Vec<ParamPoly>, ReproError> {
    let e = Some(rat(-1, 8));
    let m = TauWord::ConjugateProduct.matrix(&[e.clone(), e.clone(), e, None])?;
    let mf = m.map(|x| RatFunc::from_poly(x.to_univariate(Param::Psi).expect("only psi remains"), "psi"));
    let mp = min_poly(&mf);
    Ok(mp
        .coeffs()
        .iter()
        .map(|c| ParamPoly::from_univariate(Param::Psi, c.as_poly().expect("coefficients are polynomials in psi")))
        .collect())
}

fn stmt_psi() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("stmt-psi");
    let derived = conjugate_min_poly()?;
    let printed: Vec<ParamPoly> = reference::MINPOLY_CONJUGATE.iter().map(scaled).collect();
    let diffs: Vec<String> = (0..printed.len())
        .filter(|&k| derived.get(k) != Some(&printed[k]))
        .map(|k| format!("x^{k}: derived {} printed {}", derived.get(k).map_or("-".into(), |p| p.to_string()), printed[k]))
        .collect();
    r.check("equals printed quintic", derived.len() == 6 && diffs.is_empty(), diffs.join("; "));
    let sum = derived.iter().fold(ParamPoly::zero(), |acc, c| acc.add(c));
    r.check("x = 1 is a root", sum.is_zero(), "");
    let e = Some(rat(-1, 8));
    let fixed = [e.clone(), e.clone(), e, None];
    for (k, c) in reference::STATEMENT_PSI {
        let f = if c[1].0 == 0 {
            UniPoly::new(vec![-rat(c[0].0, c[0].1), rat(1, 1)])
        } else {
            // (x - u)^2 - 5 v^2 for u + v sqrt 5
            let (u, v) = (rat(c[0].0, c[0].1), rat(c[1].0, c[1].1));
            UniPoly::new(vec![&u * &u - rat(5, 1) * &v * &v, rat(-2, 1) * u, rat(1, 1)])
        };
        let o = verify_order_at(&f, Param::Psi, TauWord::ConjugateProduct, &fixed, 24)?;
        r.check(&format!("order divides {k}"), o.divides(k), format!("{} at {}", o, f.to_string_var("psi")));
    }
    Ok(r)
}

fn a5_obstruction() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("a5-obstruction");
    let e = Some(rat(-1, 8));
    let t = universal().substitute(&[e.clone(), e, None, None]);
    let d = t.miyamoto_basis(C)?.apply(&t.basis(B));
    let angle = t.form(&t.basis(A), &d);
    let expected: ParamPoly = "-4/3*psi + 1/24 - 1/3*gamma".parse().expect("parses");
    r.check("symbolic angle (a, d)", angle == expected, angle.to_string());

    let k = sqrt5_field();
    let gamma = nf(&k, reference::A5_GAMMA);
    let as_nf = |p: &ParamPoly, g: &NfElem, s: &NfElem| -> Result<NfElem, ScalarError> {
        let one = k.from_rational(&rat(1, 1));
        p.evaluate(&[one.clone(), one, g.clone(), s.clone()])
    };
    let zero = k.from_rational(&rat(0, 1));
    let constant = as_nf(&angle, &gamma, &zero)?;
    r.check(
        "angle constant is (3 sqrt5 + 1)/48",
        constant == nf(&k, [(1, 48), (3, 48)]),
        constant.to_string(),
    );
    // angle = constant - 4/3 psi, so psi = 3/4 (constant - target)
    let three_quarters = k.from_rational(&rat(3, 4));
    for ((target, (printed, want_order)), idx) in
        reference::A5_TARGETS.iter().zip(reference::A5_PSI).zip(1..)
    {
        let psi = three_quarters.mul(&constant.sub(&nf(&k, *target)));
        let printed_psi = nf(&k, printed);
        r.check(&format!("psi_{idx} solves the angle equation"), psi == printed_psi, psi.to_string());
        let point = ParameterPoint::new(
            Domain::NumberField(k.clone()),
            [
                Scalar::Nf(k.from_rational(&rat(-1, 8))),
                Scalar::Nf(k.from_rational(&rat(-1, 8))),
                Scalar::Nf(gamma.clone()),
                Scalar::Nf(printed_psi),
            ],
        )?;
        let gens = axis_involutions(&point)?;
        let o = matrix_order(&gens[0].mul(&gens[2]).mul(&gens[1]).mul(&gens[2]), 100);
        r.check(&format!("psi_{idx} order {want_order}"), o == OrderOutcome::Order(want_order), o.to_string());
        if want_order == 5 {
            let report = bfs_closure(&gens, group::SWEEP_CUTOFF, &Analysis::order_only())?;
            r.check(
                &format!("psi_{idx} enumeration exceeds"),
                report.order.is_none(),
                format!("{} layers {:?}", report.outcome(), report.layers),
            );
        } else {
            let rank = point.specialize(universal())?.gram_rank();
            r.check(&format!("psi_{idx} Gram rank 8"), rank == 8, rank.to_string());
        }
    }
    Ok(r)
}

fn psl27() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("psl27");
    let q = rat(1, 4);
    let point = q_point([q.clone(), q.clone(), q, rat(5, 32)]);
    let gens = axis_involutions(&point)?;
    let o = product_orders(&gens, 100);
    let want = [4, 4, 4, 3].map(OrderOutcome::Order);
    r.check("orders (4,4,4,3)", o == want, fmt_orders(&o));
    let report = bfs_closure(&gens, group::FULL_CUTOFF, &Analysis::default())?;
    r.check("group order 168", report.order == Some(168), report.outcome().to_string());
    r.check("perfect", report.perfect == Some(true), format!("{:?}", report.derived_series));
    r.check("trivial center", report.center_order == Some(1), format!("{:?}", report.center_order));
    let rank = point.specialize(universal())?.gram_rank();
    r.check("Gram rank 8", rank == 8, rank.to_string());
    Ok(r)
}

fn prop6_char5() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("prop6-char5");
    for row in reference::PROP6_ROWS {
        let point = ParameterPoint::prime_field(5, row.params)?;
        let gens = axis_involutions(&point)?;
        let report = bfs_closure(&gens, group::FULL_CUTOFF, &Analysis::default())?;
        let entry = catalog::lookup(row.group).expect("printed groups are catalogued");
        let flags = report.solvable == Some(entry.solvable)
            && entry.perfect.is_none_or(|p| report.perfect == Some(p));
        let rank = point.specialize(universal())?.gram_rank();
        r.check(
            &format!("{:?} {}", row.params, row.group),
            report.order == Some(entry.order) && flags && rank == row.gram_rank,
            format!(
                "order {} solvable {:?} perfect {:?} rank {rank} (printed {})",
                report.outcome(),
                report.solvable,
                report.perfect,
                row.gram_rank
            ),
        );
    }
    Ok(r)
}

fn example_sl85() -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("example-sl85");
    let point = ParameterPoint::prime_field(5, [3, 3, 1, 1])?;
    let t = point.specialize(universal())?;
    let d = t.basis(B_AC);
    r.check("b(ac) is idempotent", t.is_idempotent(&d), "");
    let td = t.miyamoto(&d)?;
    r.check("tau_d is an automorphism", t.is_automorphism(&td), "");
    r.check("tau_d is an involution", td.mul(&td).is_identity(), "");
    r.check("tau_d preserves the form", t.preserves_form(&td), format!("Gram rank {}", t.gram_rank()));
    let mut gens = axis_involutions(&point)?;
    let three = bfs_closure(&gens, group::FULL_CUTOFF, &Analysis::order_only())?;
    gens.push(td);
    let four = bfs_closure(&gens, group::FULL_CUTOFF, &Analysis::order_only())?;
    r.check(
        "4-generator enumeration exceeds",
        four.order.is_none(),
        format!("<tau_a,tau_b,tau_c> {} ; with tau_d {}", three.outcome(), four.outcome()),
    );
    Ok(r)
}

fn stmt_psl3q(opts: &ReproOptions) -> Result<ReproReport, ReproError> {
    let mut r = ReproReport::new("stmt-psl3q");
    let rows = reference::PSL3_ROWS
        .iter()
        .map(|row| (row, "PSL"))
        .chain(reference::PSU3_ROWS.iter().map(|row| (row, "PSU")));
    for ((q, v), kind) in rows {
        let point = ParameterPoint::prime_field(*q, *v)?;
        let gens = axis_involutions(&point)?;
        let o = product_orders(&gens, 10_000);
        let name = format!("{kind}(3,{q})");
        let label = format!("{name} {v:?}");
        if *q == 7 {
            let entry = catalog::lookup(&name).expect("q = 7 groups are catalogued");
            let full = kind == "PSL" || opts.extended;
            let cutoff = if kind == "PSU" && opts.extended { EXTENDED_CUTOFF } else { group::FULL_CUTOFF };
            let analysis = if full { Analysis { center: false, ..Analysis::default() } } else { Analysis::order_only() };
            let report = bfs_closure(&gens, cutoff, &analysis)?;
            let detail = format!("products {} group {} layers {:?}", fmt_orders(&o), report.outcome(), report.layers);
            if full {
                r.check(&label, report.order == Some(entry.order) && report.perfect == Some(true), detail);
            } else {
                r.check(&format!("{label} exceeds without extended budget"), report.order.is_none(), detail);
            }
        } else {
            let report = bfs_closure(&gens, group::SWEEP_CUTOFF, &Analysis::order_only())?;
            r.check(
                &format!("{label} exceeds"),
                report.order.is_none() && o.iter().all(|x| x.order().is_some()),
                format!("products {} group {} layers {:?}", fmt_orders(&o), report.outcome(), report.layers),
            );
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_item() {
        assert!(matches!(repro("nope", &ReproOptions { extended: false }), Err(ReproError::UnknownItem(_))));
    }

    #[test]
    fn quick_items_pass() {
        let opts = ReproOptions { extended: false };
        for item in ["remark-f7", "remark-f11", "stmt-columns", "stmt-orders", "psl27", "prop4-quotient"] {
            let rep = repro(item, &opts).unwrap();
            assert!(rep.pass(), "{}", rep.text());
        }
    }

    #[test]
    fn report_text_lists_checks() {
        let rep = repro("remark-f7", &ReproOptions { extended: false }).unwrap();
        assert!(rep.text().starts_with("remark-f7: PASS\n  [ok] F_7 orders"));
    }
}
