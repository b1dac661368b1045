//! Symbolic properties of the involution products over the parameter ring.

use pcaxial::algebra::{basis::*, universal};
use pcaxial::linalg::char_poly;
use pcaxial::poly::{Param, ParamPoly};
use pcaxial::scalars::Ring;

fn tau_ab() -> pcaxial::linalg::ExactMatrix<ParamPoly> {
    let t = universal();
    t.miyamoto_basis(A).unwrap().mul(&t.miyamoto_basis(B).unwrap())
}

fn alpha_only(p: &ParamPoly) -> bool {
    [Param::Beta, Param::Gamma, Param::Psi].iter().all(|&v| p.degree_in(v) == 0)
}

#[test]
fn char_poly_is_palindromic_in_alpha() {
    let p = char_poly(&tau_ab());
    let c = p.coeffs().to_vec();
    assert_eq!(c.len(), 9);
    let mut rev = c.clone();
    rev.reverse();
    assert_eq!(c, rev);
    assert!(c.iter().all(alpha_only));
}

#[test]
fn subalgebra_columns_stay_in_alpha() {
    let m = tau_ab();
    let inside = [A, B, AB];
    let outside = [C, BC, AC, A_BC, B_AC];
    let mut power = m.clone();
    for n in 1..=6 {
        for &j in &inside {
            for i in 0..8 {
                let e = power.get(i, j);
                if outside.contains(&i) {
                    assert!(e.is_zero(), "n={n} ({i},{j}) should vanish");
                } else {
                    assert!(alpha_only(e), "n={n} ({i},{j}) = {e}");
                }
            }
        }
        for &i in &outside {
            for &j in &outside {
                assert!(alpha_only(power.get(i, j)), "n={n} ({i},{j})");
            }
        }
        power = power.mul(&m);
    }
}
