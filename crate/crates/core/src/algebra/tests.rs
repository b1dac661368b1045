use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::*;
use super::*;
use crate::linalg::{kernel_of_rows, parse_dump, ExactMatrix};
use crate::poly::ParamPoly;
use crate::reference;
use crate::scalars::{rat, Fp, Rational, Ring};

fn pp(s: &str) -> ParamPoly {
    s.parse().unwrap()
}

fn vec_pp(items: &[&str]) -> Vec<ParamPoly> {
    items.iter().map(|s| pp(s)).collect()
}

fn printed(s: &str) -> ExactMatrix<ParamPoly> {
    parse_dump(s, |x| x.parse::<ParamPoly>()).unwrap()
}

fn random_point(rng: &mut ChaCha8Rng) -> [Rational; 4] {
    std::array::from_fn(|_| rat(rng.gen_range(-40..40), rng.gen_range(1..16)))
}

#[test]
fn defining_products() {
    let t = universal();
    assert_eq!(t.product_of_basis(A, A), t.basis(A).as_slice());
    assert_eq!(t.product_of_basis(A, AB), vec_pp(&["alpha", "1/2", "0", "-1/2", "0", "0", "0", "0"]).as_slice());
    assert_eq!(t.product_of_basis(AB, C), vec_pp(&["beta", "gamma", "alpha", "0", "0", "0", "-1", "-1"]).as_slice());
    assert_eq!(*t.gram().get(AB, AB), pp("alpha^2 - 1/2*alpha + 1/2"));
    for (i, j) in [(AB, C), (A, BC), (B, AC)] {
        assert_eq!(t.form(&t.basis(i), &t.basis(j)), pp("psi"));
    }
}

#[test]
fn table_matches_golden_dump() {
    assert_eq!(universal().dump(), include_str!("../../golden/universal_table.txt"));
}

#[test]
fn identities_hold_symbolically() {
    let t = universal();
    assert!(t.trilinear_defects().is_empty());
    assert!(t.frobenius_defects().is_empty());
    assert_eq!(t.gram(), &t.gram().transpose());
}

#[test]
fn involutions_match_printed_matrices() {
    let t = universal();
    assert_eq!(t.miyamoto_basis(A).unwrap(), printed(reference::TAU_A));
    assert_eq!(t.miyamoto_basis(B).unwrap(), printed(reference::TAU_B));
    assert_eq!(t.miyamoto_basis(C).unwrap(), printed(reference::TAU_C));
    let tau_a = t.miyamoto_basis(A).unwrap();
    assert_eq!(tau_a.column(B), vec_pp(&["8/3*alpha", "-1/3", "0", "-4/3", "0", "0", "0", "0"]));
}

#[test]
fn two_generated_subtable() {
    let sub = universal().subtable(&[A, B, AB]).unwrap();
    let m = sub.miyamoto_basis(0).unwrap().mul(&sub.miyamoto_basis(1).unwrap());
    assert_eq!(m, printed(reference::TAU_AB_3X3));
    assert!(universal().subtable(&[A, B]).is_err());
}

#[test]
fn involutions_are_automorphisms() {
    let t = universal();
    for i in [A, B, C] {
        let tau = t.miyamoto_basis(i).unwrap();
        assert!(tau.mul(&tau).is_identity());
        assert!(t.is_automorphism(&tau));
        assert!(t.preserves_form(&tau));
    }
}

#[test]
fn non_axes_are_rejected() {
    let t = universal();
    let x: Vec<ParamPoly> = (0..8).map(|i| if i < 2 { ParamPoly::one() } else { ParamPoly::zero() }).collect();
    assert!(!t.is_idempotent(&x));
    assert_eq!(t.miyamoto(&x), Err(AlgebraError::NotAnAxis));
    let bad = ExactMatrix::identity(8, &ParamPoly::one()).scale(&ParamPoly::int(2));
    assert_eq!(t.conjugate_axis(&t.basis(A), &bad), Err(AlgebraError::NotAutomorphism));
}

#[test]
fn conjugated_axis_is_idempotent() {
    let t = universal();
    let id = ExactMatrix::identity(8, &ParamPoly::one());
    assert_eq!(t.conjugate_axis(&t.basis(B), &id).unwrap(), t.basis(B));
    let d = t.conjugate_axis(&t.basis(B), &t.miyamoto_basis(C).unwrap()).unwrap();
    assert!(t.is_idempotent(&d));
}

#[test]
fn specialization() {
    let t = universal();
    let same = t.substitute(&[None, None, None, None]);
    assert_eq!(&same, t);
    let f3 = [Fp::new(1, 3).unwrap(); 4];
    assert!(t.specialize(&f3).is_err());
    let f5 = [3, 3, 1, 1].map(|x| Fp::new(x, 5).unwrap());
    let s = t.specialize(&f5).unwrap();
    assert!(s.trilinear_defects().is_empty());
    let b_ac = s.basis(B_AC);
    assert!(s.is_idempotent(&b_ac));
}

#[test]
fn fusion_grading_at_random_points() {
    let t = universal();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let half = rat(1, 2);
    for _ in 0..20 {
        let s = t.specialize(&random_point(&mut rng)).unwrap();
        for axis in [A, B, C] {
            let tau = s.miyamoto_basis(axis).unwrap();
            let id = ExactMatrix::identity(8, &rat(1, 1));
            let proj = id.sub(&tau).scale(&half);
            let l_half = s.left_mult(&s.basis(axis)).sub(&id.scale(&half));
            let eigen = kernel_of_rows(l_half.rows(), 8);
            assert!(l_half.mul(&proj).is_zero());
            assert_eq!(proj.rank(), eigen.len());
        }
    }
}

#[test]
fn commutation_with_ring_operations() {
    let t = universal();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let point = random_point(&mut rng);
    let s = t.specialize(&point).unwrap();
    let tau = t.miyamoto_basis(A).unwrap().mul(&t.miyamoto_basis(C).unwrap());
    let tau_s = s.miyamoto_basis(A).unwrap().mul(&s.miyamoto_basis(C).unwrap());
    assert_eq!(tau.try_map(|p| p.evaluate(&point)).unwrap(), tau_s);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn pseudo_composition_identity(
        params in prop::array::uniform4((-30i64..30, 1i64..9)),
        coords in prop::collection::vec(-6i64..6, 8),
    ) {
        let point = params.map(|(n, d)| rat(n, d));
        let s = universal().specialize(&point).unwrap();
        let x: Vec<Rational> = coords.iter().map(|&c| rat(c, 1)).collect();
        let cube = s.mul(&s.mul(&x, &x), &x);
        let phi = s.form(&x, &x);
        let rhs: Vec<Rational> = x.iter().map(|c| c.mul(&phi)).collect();
        prop_assert_eq!(cube, rhs);
    }
}
