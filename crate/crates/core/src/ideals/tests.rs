use proptest::prelude::*;

use super::*;
use crate::algebra::{basis::*, universal, ParameterPoint};
use crate::linalg::{element_order, parse_dump, rank_of_rows, OrderOutcome};
use crate::poly::ParamPoly;
use crate::reference;
use crate::scalars::{rat, Fp, Rational};

fn q_table(v: [Rational; 4]) -> AlgebraTable<Rational> {
    universal().specialize(&v).unwrap()
}

fn tau_ab<F: Ring>(t: &AlgebraTable<F>) -> ExactMatrix<F> {
    t.miyamoto_basis(A).unwrap().mul(&t.miyamoto_basis(B).unwrap())
}

fn prop3_table() -> AlgebraTable<Rational> {
    q_table([rat(1, 4), rat(1, 1), rat(1, 4), rat(1, 4)])
}

fn prop3_ideal(t: &AlgebraTable<Rational>) -> IdealBasis<Rational> {
    ideal_closure(t, &fixed_point_defect(t, &tau_ab(t), 2).unwrap())
}

#[test]
fn symbolic_defect_matches_print() {
    let t = universal().substitute(&[Some(rat(1, 4)), None, None, None]);
    let m = tau_ab(&t);
    let defects = fixed_point_defect(&t, &m, 2).unwrap();
    let printed = parse_dump(reference::DEFECT_X9, |s| s.parse::<ParamPoly>()).unwrap();
    let nine = ParamPoly::constant(rat(9, 1));
    for (i, d) in defects.iter().enumerate() {
        let scaled: Vec<ParamPoly> = d.iter().map(|x| x.mul(&nine)).collect();
        assert_eq!(scaled, printed.row(i), "row {i}");
    }
    // the a-coefficient of the defect of x_3 = c
    assert_eq!(printed.get(C, A), &"-16/3*beta + 32/3*gamma - 64/3*psi".parse::<ParamPoly>().unwrap());
}

#[test]
fn echelon_of_last_four_columns() {
    let printed = parse_dump(reference::DEFECT_X9, |s| s.parse::<ParamPoly>()).unwrap();
    let tail: Vec<Vec<Rational>> = (0..8)
        .map(|i| (4..8).map(|j| printed.get(i, j).constant_value().unwrap()).collect())
        .collect();
    assert_eq!(rank_of_rows(tail.clone(), 4), 4);
    let echelon: Vec<Vec<Rational>> =
        reference::DEFECT_ECHELON.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect();
    // same row space: stacking adds no rank
    let mut both = tail;
    both.extend(echelon.clone());
    assert_eq!(rank_of_rows(both, 4), 4);
    assert_eq!(rank_of_rows(echelon, 4), 4);
}

#[test]
fn prop3_ideal_and_quotient() {
    let t = prop3_table();
    let m = tau_ab(&t);
    assert_eq!(element_order(&m, 100), Ok(OrderOutcome::Order(4)));
    let ideal = prop3_ideal(&t);
    assert_eq!(ideal.dim(), 4);
    let q = quotient(&t, &ideal).unwrap();
    assert_eq!(q.table.dim(), 4);
    assert_eq!(element_order(&q.induced(&m).unwrap(), 100), Ok(OrderOutcome::Order(2)));
}

#[test]
fn prop3_variants() {
    let t = prop3_table();
    let ideal = prop3_ideal(&t);
    let mut seeds = ideal.vectors().to_vec();
    let b_minus_c: Vec<Rational> = t.basis(B).iter().zip(t.basis(C)).map(|(x, y)| x - y).collect();
    seeds.push(b_minus_c);
    let bc = ideal_closure(&t, &seeds);
    assert_eq!(bc.dim(), 5);
    assert!(bc.contains_ideal(&ideal));

    let mut seeds = ideal.vectors().to_vec();
    seeds.push(t.basis(AB));
    seeds.push(t.basis(C));
    let abc = ideal_closure(&t, &seeds);
    assert_eq!(abc.dim(), 8, "ab = 0 = c forces the whole algebra");
}

#[test]
fn trivial_and_generator_seeds() {
    let t = q_table([rat(2, 7), rat(-3, 5), rat(1, 9), rat(5, 11)]);
    assert_eq!(ideal_closure(&t, &[]).dim(), 0);
    assert_eq!(ideal_closure(&t, &[t.basis(A)]).dim(), 8);
    let full = ideal_closure(&t, &[t.basis(A)]);
    assert_eq!(quotient(&t, &full).unwrap_err(), IdealError::ImproperIdeal);
}

#[test]
fn defect_of_full_power_vanishes() {
    let t = q_table([rat(-1, 8), rat(1, 3), rat(2, 5), rat(1, 7)]);
    let m = tau_ab(&t);
    let d = fixed_point_defect(&t, &m, 3).unwrap();
    assert!(d.iter().flatten().all(|x| x == &rat(0, 1)));
    let not_aut = ExactMatrix::identity(8, &rat(1, 1)).scale(&rat(2, 1));
    assert_eq!(fixed_point_defect(&t, &not_aut, 1).unwrap_err(), IdealError::NotAutomorphism);
}

#[test]
fn gram_rank_examples() {
    let t = q_table([rat(1, 4), rat(1, 4), rat(1, 4), rat(5, 32)]);
    assert_eq!(gram_rank(&t), 8);
    for (v, rank) in [([3, 0, 4, 4], 5), ([3, 4, 1, 1], 4)] {
        let point = ParameterPoint::prime_field(5, v).unwrap();
        let t = point.specialize(universal()).unwrap();
        assert_eq!(gram_rank(&t), rank);
        let rad = radical(&t);
        assert_eq!(rad.dim(), 8 - rank);
        assert_eq!(ideal_closure(&t, rad.vectors()).dim(), rad.dim(), "radical is an ideal");
        let q = quotient(&t, &rad).unwrap();
        assert_eq!(gram_rank(&q.table), rank, "form is nondegenerate modulo its radical");
    }
}

#[test]
fn quotient_dump_has_parent() {
    let t = prop3_table();
    let q = quotient(&t, &prop3_ideal(&t)).unwrap();
    let dump = q.dump("Q (1/4, 1, 1/4, 1/4)");
    assert!(dump.starts_with("parent = Q (1/4, 1, 1/4, 1/4)\nideal = ["));
    assert_eq!(q.table.labels().len(), 4);
}

fn fp_table(p: u64, v: [u64; 4]) -> Option<AlgebraTable<Fp>> {
    let point: [Fp; 4] = std::array::from_fn(|i| Fp::new(v[i] % p, p).unwrap());
    universal().specialize(&point).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ideals_are_invariant_and_quotients_are_homomorphic(
        p in prop::sample::select(vec![5u64, 7, 11, 13]),
        v in prop::array::uniform4(0u64..13),
        seed in prop::collection::vec(0u64..13, 8),
        xs in prop::collection::vec(0u64..13, 16),
    ) {
        let t = fp_table(p, v).unwrap();
        let one = Fp::new(1, p).unwrap();
        let seed: Vec<Fp> = seed.iter().map(|&x| Fp::new(x % p, p).unwrap()).collect();
        let ideal = ideal_closure(&t, &[seed]);
        let taus: Vec<_> = (0..3).map(|i| t.miyamoto_basis(i).unwrap()).collect();
        for m in &taus {
            prop_assert!(ideal.is_invariant_under(m));
        }
        if ideal.dim() < t.dim() {
            let q = quotient(&t, &ideal).unwrap();
            let x: Vec<Fp> = xs[..8].iter().map(|&c| one.from_int_like(c as i64)).collect();
            let y: Vec<Fp> = xs[8..].iter().map(|&c| one.from_int_like(c as i64)).collect();
            prop_assert_eq!(q.project(&t.mul(&x, &y)), q.table.mul(&q.project(&x), &q.project(&y)));
            let m = taus[0].mul(&taus[1]);
            if let (Ok(OrderOutcome::Order(n)), Ok(OrderOutcome::Order(k))) =
                (element_order(&m, 10_000), element_order(&q.induced(&m).unwrap(), 10_000))
            {
                prop_assert_eq!(n % k, 0);
            }
        }
    }

    #[test]
    fn radical_is_an_ideal(p in prop::sample::select(vec![5u64, 7, 11]), v in prop::array::uniform4(0u64..11)) {
        let t = fp_table(p, v).unwrap();
        let rad = radical(&t);
        for r in rad.vectors() {
            for i in 0..t.dim() {
                prop_assert!(rad.contains(&t.mul(&t.basis(i), r)));
            }
        }
    }
}
