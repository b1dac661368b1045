use super::*;
use crate::algebra::{basis, ParameterPoint};
use crate::scalars::rat;

fn f5(v: [i64; 4]) -> Vec<ExactMatrix<Scalar>> {
    axis_involutions(&ParameterPoint::prime_field(5, v).unwrap()).unwrap()
}


#[test]
fn dihedral_from_two_generator_subalgebra() {
    let point = ParameterPoint::new(
        Domain::Rationals,
        [rat(-1, 8), rat(0, 1), rat(0, 1), rat(0, 1)].map(Scalar::Q),
    )
    .unwrap();
    let table = point.specialize(crate::algebra::universal()).unwrap();
    let sub = table.subtable(&[basis::A, basis::B, basis::AB]).unwrap();
    let gens = vec![sub.miyamoto_basis(0).unwrap(), sub.miyamoto_basis(1).unwrap()];
    let report = bfs_closure(&gens, 1000, &Analysis::default()).unwrap();
    assert_eq!(report.order, Some(6));
    assert_eq!(report.solvable, Some(true));
    assert_eq!(report.perfect, Some(false));
    assert_eq!(report.derived_series, Some(vec![6, 3, 1]));
}

#[test]
fn psl27_over_f5() {
    let gens = f5([3, 3, 4, 4]);
    let report = bfs_closure(&gens, FULL_CUTOFF, &Analysis::default()).unwrap();
    assert_eq!(report.order, Some(168));
    assert_eq!(report.perfect, Some(true));
    assert_eq!(report.solvable, Some(false));
    assert_eq!(report.center_order, Some(1));
    assert_eq!(report.catalog, vec!["PSL(2,7)".to_string()]);
    assert_eq!(report.layers.iter().sum::<usize>(), 168);
}

#[test]
fn identity_generates_trivial_group() {
    let id = ExactMatrix::identity(4, &Scalar::Q(rat(1, 1)));
    let report = bfs_closure(&[id], 10, &Analysis::default()).unwrap();
    assert_eq!(report.order, Some(1));
    assert_eq!(report.solvable, Some(true));
}

#[test]
fn singular_generator_rejected() {
    let z = ExactMatrix::zero(3, &Scalar::Q(rat(0, 1)));
    let id = ExactMatrix::identity(3, &Scalar::Q(rat(1, 1)));
    assert_eq!(bfs_closure(&[id, z], 10, &Analysis::default()), Err(GroupError::Singular(1)));
    assert_eq!(bfs_closure(&[], 10, &Analysis::default()), Err(GroupError::NoGenerators));
}

#[test]
fn cutoff_reports_exceeded() {
    let gens = f5([3, 3, 4, 4]);
    let report = bfs_closure(&gens, 100, &Analysis::default()).unwrap();
    assert_eq!(report.outcome(), OrderOutcome::Exceeded(100));
    assert_eq!(report.outcome, "exceeded");
    assert!(report.solvable.is_none() && report.center_order.is_none());
    let json = serde_json::to_value(&report).unwrap();
    assert!(json.get("order").is_none());
    assert!(json.get("layers").is_some());
}

#[test]
fn derived_analysis_requires_enumeration() {
    let gens = f5([3, 3, 4, 4]);
    let rep = SmallFpRep::new(8, 5).unwrap();
    let elems: Vec<Packed> = gens
        .iter()
        .map(|g| rep.encode(&g.map(|x| match x {
            Scalar::Fp(a) => *a,
            _ => unreachable!(),
        })))
        .collect();
    let e = Enumerated::new(&rep, elems, 50);
    assert_eq!(e.derived_analysis(), Err(GroupError::NotEnumerated(50)));
}

#[test]
fn closure_is_a_group_and_order_is_invariant() {
    let gens = f5([3, 3, 4, 4]);
    let rep = SmallFpRep::new(8, 5).unwrap();
    let elems: Vec<Packed> = gens
        .iter()
        .map(|g| rep.encode(&g.map(|x| match x {
            Scalar::Fp(a) => *a,
            _ => unreachable!(),
        })))
        .collect();
    let e = Enumerated::new(&rep, elems.clone(), 1000);
    let set = e.elements().unwrap();
    assert!(set.contains(&rep.identity()));
    assert!(analysis::spot_check_closed(&rep, set, 1000, 7));

    let reversed: Vec<Packed> = elems.iter().rev().cloned().collect();
    assert_eq!(analysis::group_order(&rep, &reversed, 1000), Some(168));
    let g = set.iter().nth(17).unwrap();
    let conj: Vec<Packed> = elems.iter().map(|x| rep.conjugate(x, g)).collect();
    assert_eq!(analysis::group_order(&rep, &conj, 1000), Some(168));
}

fn g_twice(rep: &SmallFpRep, s: &Packed) -> Packed {
    rep.mul(s, s)
}

#[test]
fn packed_and_large_representations_agree() {
    let gens = f5([3, 0, 4, 4]);
    let small = SmallFpRep::new(8, 5).unwrap();
    let large = LargeFpRep::new(8, 5);
    for g in &gens {
        let f = g.map(|x| match x {
            Scalar::Fp(a) => *a,
            _ => unreachable!(),
        });
        let s = small.encode(&f);
        let rows = small.decode(&s);
        let l = large.from_rows(&rows);
        let st = small.mul(&s, &g_twice(&small, &s));
        let lt = large.mul(&l, &large.mul(&l, &l));
        assert_eq!(large.from_rows(&small.decode(&st)), lt);
        assert_eq!(large.mul(&l, &l), large.identity());
        assert!(small.is_identity(&small.mul(&s, &small.inv(&s))));
    }
}

#[test]
fn rational_control_completes_through_reduction() {
    let point = ParameterPoint::new(
        Domain::Rationals,
        [rat(1, 4), rat(1, 4), rat(1, 4), rat(5, 32)].map(Scalar::Q),
    )
    .unwrap();
    let gens = axis_involutions(&point).unwrap();
    let report = bounded_infinite_probe(&gens, 10_000, &Analysis::default()).unwrap();
    assert_eq!(report.order, Some(168));
    assert_eq!(report.perfect, Some(true));
    assert!(report.reduction_prime.is_some());
}

#[test]
fn plane_motion_group_exceeds() {
    let point = ParameterPoint::new(
        Domain::Rationals,
        [rat(-1, 8), rat(-1, 8), rat(-1, 8), rat(1, 7)].map(Scalar::Q),
    )
    .unwrap();
    let gens = axis_involutions(&point).unwrap();
    let report = bounded_infinite_probe(&gens, 20_000, &Analysis::default()).unwrap();
    assert_eq!(report.outcome(), OrderOutcome::Exceeded(20_000));
    // growth continues through the last layer
    assert!(report.layers.len() > 5);
}

#[test]
fn catalog_orders() {
    let orders: Vec<(&str, u64)> = CATALOG.iter().map(|e| (e.name, e.order)).collect();
    for (name, n) in [
        ("A6", 360),
        ("A7", 2520),
        ("PSL(2,7)", 168),
        ("PSL(3,5)", 372_000),
        ("PSU(3,5)", 126_000),
        ("5^5:A5", 187_500),
        ("5^5:S5", 375_000),
        ("5^2:(5^2:(SL(2,5):2))", 150_000),
    ] {
        assert!(orders.contains(&(name, n)));
    }
    // order formulas: |PSL(3,q)| = q^3 (q^2-1)(q^3-1) / gcd(3, q-1)
    let psl3 = |q: u64| q.pow(3) * (q * q - 1) * (q.pow(3) - 1) / num_integer::gcd(3, q - 1);
    let psu3 = |q: u64| q.pow(3) * (q * q - 1) * (q.pow(3) + 1) / num_integer::gcd(3, q + 1);
    assert_eq!(catalog::lookup("PSL(3,5)").unwrap().order, psl3(5));
    assert_eq!(catalog::lookup("PSU(3,5)").unwrap().order, psu3(5));
    assert_eq!(catalog::lookup("PSL(3,7)").unwrap().order, psl3(7));
    assert_eq!(catalog::lookup("PSU(3,7)").unwrap().order, psu3(7));
    assert_eq!(identify(168, Some(true), None), vec!["PSL(2,7) (flags differ)".to_string()]);
    assert!(identify(12, None, None).is_empty());
}

#[test]
fn invert_mod_p_roundtrip() {
    let a = vec![vec![2, 3], vec![1, 4]];
    let inv = rep::invert_mod_p(a.clone(), 7).unwrap();
    let prod: Vec<Vec<u64>> = (0..2)
        .map(|i| (0..2).map(|j| (0..2).map(|k| a[i][k] * inv[k][j]).sum::<u64>() % 7).collect())
        .collect();
    assert_eq!(prod, vec![vec![1, 0], vec![0, 1]]);
    assert!(rep::invert_mod_p(vec![vec![1, 2], vec![2, 4]], 7).is_none());
}
