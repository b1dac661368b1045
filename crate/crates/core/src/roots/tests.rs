use super::*;
use crate::scalars::rat;

fn poly(s: &str) -> UniPoly<Rational> {
    UniPoly::parse_var(s, "x").unwrap()
}

#[test]
fn order_three_values() {
    let sol = solve_order_2gen(3).unwrap();
    let exact: Vec<Rational> = sol.exact().map(|c| c.value.as_rational().unwrap()).collect();
    assert_eq!(exact, vec![rat(-1, 8), rat(5, 8)]);
    assert!(sol.candidates.iter().all(|c| c.order.divides(3)));
}

#[test]
fn order_five_quadratics() {
    let sol = solve_order_2gen(5).unwrap();
    let mins: Vec<String> = sol.exact().map(|c| c.value.minpoly().to_string()).collect();
    assert_eq!(sol.exact().count(), 4);
    // (x - 7/16)^2 - 45/256 and (x - 1/16)^2 - 45/256
    assert!(mins.contains(&"x^2 - 7/8*x + 1/64".to_string()));
    assert!(mins.contains(&"x^2 - 1/8*x - 11/64".to_string()));
}

#[test]
fn order_seven_cubics() {
    let sol = solve_order_2gen(7).unwrap();
    for c in sol.exact() {
        let m = c.value.minpoly().clone();
        assert!(m == poly("x^3 - 3/8*x^2 - 9/32*x + 13/512") || m == poly("x^3 - 9/8*x^2 + 3/32*x + 43/512"));
    }
    assert!(sol.exact().count() >= 2);
}

#[test]
fn verify_rejects_reducible() {
    let r = verify_order_at(&poly("x^2 - 1/16"), Param::Alpha, TauWord::TwoGenerated, &[None, None, None, None], 4);
    assert!(matches!(r, Err(RootsError::ReducibleMinpoly(_))));
}

#[test]
fn verify_orders_at_quarter() {
    let q = poly("x - 1/4");
    let none = [None, None, None, None];
    assert_eq!(verify_order_at(&q, Param::Alpha, TauWord::TwoGenerated, &none, 12), Ok(OrderOutcome::Order(2)));
    assert_eq!(verify_order_at(&q, Param::Alpha, TauWord::UniversalAB, &none, 12), Ok(OrderOutcome::Order(4)));
    // 1/4 ± 3/(4 sqrt 2)
    let m = RadicalValue::Simple { c: (1, 4), r: (3, 4), s: (1, 2) }.polynomial();
    assert_eq!(verify_order_at(&m, Param::Alpha, TauWord::TwoGenerated, &none, 12), Ok(OrderOutcome::Order(4)));
}

#[test]
fn conjugate_product_values() {
    let angle = default_angle();
    for (k, psi) in [(3, rat(5, 32)), (4, rat(-1, 8)), (6, rat(-13, 32))] {
        let sol = solve_order_3gen_conjugate(k, &angle).unwrap();
        assert!(sol.candidates.iter().any(|c| c.value.equals_rational(&psi)), "k={k}");
    }
}

#[test]
fn finite_field_tables() {
    let f7: Vec<u64> = finite_field_orders(7).unwrap().into_iter().map(|o| o.order().unwrap()).collect();
    assert_eq!(f7, F7_ORDERS);
    let f11: Vec<u64> = finite_field_orders(11).unwrap().into_iter().map(|o| o.order().unwrap()).collect();
    assert_eq!(f11, F11_ORDERS);
}

#[test]
fn radical_polynomials_vanish_at_printed_values() {
    for row in PROP1_ROWS {
        for v in row.values {
            let f = v.polynomial();
            for x in v.approximations() {
                let y = f.coeffs().iter().rev().fold(0.0, |acc, c| {
                    acc * x + num_traits::ToPrimitive::to_f64(c).unwrap()
                });
                assert!(y.abs() < 1e-9, "row {} value {x}", row.order);
            }
        }
    }
}
