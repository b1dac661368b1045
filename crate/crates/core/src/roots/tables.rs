use crate::algebra::{universal, AlgebraError};
use crate::linalg::{element_order, OrderOutcome, DEFAULT_ORDER_CUTOFF};
use crate::poly::UniPoly;
use crate::scalars::{rat, Fp, Rational};

use super::RootsError;

type Q = (i64, i64);

fn q(x: Q) -> Rational {
    rat(x.0, x.1)
}

/// A printed parameter value for some order of `tau_ab`.
#[derive(Debug, Clone, Copy)]
pub enum RadicalValue {
    Rational(Q),
    /// `c ± r*sqrt(s)`
    Simple { c: Q, r: Q, s: Q },
    /// `c ± r*sqrt(u ± v*sqrt(w))`
    Nested { c: Q, r: Q, u: Q, v: Q, w: Q },
    /// Real roots of a printed polynomial in `x`.
    RootOf(&'static str),
}

impl RadicalValue {
    /// Polynomial over Q vanishing at all sign choices, obtained by squaring.
    pub fn polynomial(&self) -> UniPoly<Rational> {
        let x = UniPoly::new(vec![rat(0, 1), rat(1, 1)]);
        let cst = |v: Rational| UniPoly::constant(v);
        let shifted_sq = |c: Q, r: Q| {
            // ((x - c) / r)^2
            let y = x.sub(&cst(q(c))).scale(&(rat(1, 1) / q(r)));
            y.mul(&y)
        };
        match *self {
            RadicalValue::Rational(c) => x.sub(&cst(q(c))),
            RadicalValue::Simple { c, r, s } => shifted_sq(c, r).sub(&cst(q(s))).monic(),
            RadicalValue::Nested { c, r, u, v, w } => {
                let z = shifted_sq(c, r).sub(&cst(q(u)));
                let vv = q(v) * q(v) * q(w);
                z.mul(&z).sub(&cst(vv)).monic()
            }
            RadicalValue::RootOf(p) => UniPoly::parse_var(p, "x").expect("printed polynomial parses").monic(),
        }
    }

    /// Floating-point values of the printed expression, all sign choices.
    pub fn approximations(&self) -> Vec<f64> {
        let f = |x: Q| x.0 as f64 / x.1 as f64;
        match *self {
            RadicalValue::Rational(c) => vec![f(c)],
            RadicalValue::Simple { c, r, s } => {
                let d = f(r) * f(s).sqrt();
                vec![f(c) - d, f(c) + d]
            }
            RadicalValue::Nested { c, r, u, v, w } => {
                let mut out = Vec::new();
                for inner in [f(u) - f(v) * f(w).sqrt(), f(u) + f(v) * f(w).sqrt()] {
                    let d = f(r) * inner.sqrt();
                    out.extend([f(c) - d, f(c) + d]);
                }
                out
            }
            RadicalValue::RootOf(_) => Vec::new(),
        }
    }
}

/// One row of the table of orders of `tau_ab` over the reals.
#[derive(Debug, Clone, Copy)]
pub struct Prop1Row {
    pub order: u64,
    pub values: &'static [RadicalValue],
}

use RadicalValue::*;

pub const PROP1_ROWS: &[Prop1Row] = &[
    Prop1Row { order: 2, values: &[Rational((1, 4))] },
    Prop1Row { order: 3, values: &[Rational((-1, 8)), Rational((5, 8))] },
    // 1/4 ± 3/(4 sqrt 2) = 1/4 ± (3/4) sqrt(1/2)
    Prop1Row { order: 4, values: &[Simple { c: (1, 4), r: (3, 4), s: (1, 2) }] },
    Prop1Row {
        order: 5,
        values: &[Simple { c: (7, 16), r: (3, 16), s: (5, 1) }, Simple { c: (1, 16), r: (3, 16), s: (5, 1) }],
    },
    Prop1Row { order: 6, values: &[Simple { c: (1, 4), r: (3, 8), s: (3, 1) }] },
    Prop1Row {
        order: 7,
        values: &[RootOf("x^3 - 3/8*x^2 - 9/32*x + 13/512"), RootOf("x^3 - 9/8*x^2 + 3/32*x + 43/512")],
    },
    // (2 ± 3 sqrt(2 ± sqrt 2)) / 8
    Prop1Row { order: 8, values: &[Nested { c: (1, 4), r: (3, 8), u: (2, 1), v: (1, 1), w: (2, 1) }] },
    Prop1Row {
        order: 9,
        values: &[RootOf("x^3 - 3/4*x^2 - 15/64*x + 19/512"), RootOf("x^3 - 3/4*x^2 - 15/64*x + 73/512")],
    },
    // (4 ± 3 sqrt(2(5 ± sqrt 5))) / 16 = 1/4 ± (3/16) sqrt(10 ± 2 sqrt 5)
    Prop1Row { order: 10, values: &[Nested { c: (1, 4), r: (3, 16), u: (10, 1), v: (2, 1), w: (5, 1) }] },
    Prop1Row {
        order: 11,
        values: &[
            RootOf("x^5 - 7/8*x^4 - 5/16*x^3 + 127/512*x^2 + 119/4096*x - 263/32768"),
            RootOf("x^5 - 13/8*x^4 + 7/16*x^3 + 145/512*x^2 - 337/4096*x - 197/32768"),
        ],
    },
    Prop1Row { order: 12, values: &[Nested { c: (1, 4), r: (3, 8), u: (2, 1), v: (1, 1), w: (3, 1) }] },
];

/// Printed orders of `tau_ab` over F_7 and F_11, indexed by alpha.
pub const F7_ORDERS: [u64; 7] = [4, 7, 2, 7, 4, 3, 3];
pub const F11_ORDERS: [u64; 11] = [5, 11, 3, 2, 3, 11, 5, 5, 6, 6, 5];

/// Order of the 2-generated `tau_a tau_b` over F_p for every alpha in 0..p.
pub fn finite_field_orders(p: u64) -> Result<Vec<OrderOutcome>, RootsError> {
    let zero = Fp::new(0, p).map_err(AlgebraError::from)?;
    (0..p)
        .map(|alpha| {
            let a = Fp::new(alpha, p).map_err(AlgebraError::from)?;
            let t = universal().specialize(&[a, zero, zero, zero])?.subtable(&[0, 1, 3])?;
            let m = t.miyamoto_basis(0)?.mul(&t.miyamoto_basis(1)?);
            Ok(element_order(&m, DEFAULT_ORDER_CUTOFF).expect("involution products are invertible"))
        })
        .collect()
}
