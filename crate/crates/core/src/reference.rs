//! Reference values the repro checks and acceptance tests compare against.
//! Matrices are row-major dumps in the parameter-polynomial text format.

pub const TAU_A: &str = "\
1, 8/3*alpha, 8/3*gamma, 4/3*alpha, 8/3*psi, 4/3*gamma, 4/3*psi, 8/3*alpha*gamma + beta - 2/3*psi
0, -1/3, 0, -2/3, 0, 0, 0, -1/3*gamma
0, 0, -1/3, 0, 0, -2/3, 0, alpha
0, -4/3, 0, 1/3, 0, 0, 0, 2/3*gamma
0, 0, 0, 0, -1/3, 0, -2/3, 1/3
0, 0, -4/3, 0, 0, 1/3, 0, -2*alpha
0, 0, 0, 0, -4/3, 0, 1/3, -2/3
0, 0, 0, 0, 0, 0, 0, -1";

pub const TAU_B: &str = "\
-1/3, 0, 0, -2/3, 0, 0, -1/3*beta, 0
8/3*alpha, 1, 8/3*beta, 4/3*alpha, 4/3*beta, 8/3*psi, 8/3*alpha*beta + gamma - 2/3*psi, 4/3*psi
0, 0, -1/3, 0, -2/3, 0, alpha, 0
-4/3, 0, 0, 1/3, 0, 0, 2/3*beta, 0
0, 0, -4/3, 0, 1/3, 0, -2*alpha, 0
0, 0, 0, 0, 0, -1/3, 1/3, -2/3
0, 0, 0, 0, 0, 0, -1, 0
0, 0, 0, 0, 0, -4/3, -2/3, 1/3";

/// The printed involution for `c`; both `xi` entries of row 3 use
/// `8/3*beta*gamma + 1/3*alpha - 2/3*psi`.
pub const TAU_C: &str = "\
-1/3, 0, 0, -4/3*beta, 0, -2/3, -beta, 1/3*beta
0, -1/3, 0, -4/3*gamma, -2/3, 0, 1/3*gamma, -gamma
8/3*gamma, 8/3*beta, 1, -4/3*alpha + 8/3*psi, 4/3*beta, 4/3*gamma, 8/3*beta*gamma + 1/3*alpha - 2/3*psi, 8/3*beta*gamma + 1/3*alpha - 2/3*psi
0, 0, 0, -1/3, 0, 0, 1/3, 1/3
0, -4/3, 0, 0, 1/3, 0, -2*gamma, 2/3*gamma
-4/3, 0, 0, 0, 0, 1/3, 2/3*beta, -2*beta
0, 0, 0, 4/3, 0, 0, -1/3, 2/3
0, 0, 0, 4/3, 0, 0, 2/3, -1/3";

/// Printed `tau_a tau_b` on the 2-generated subalgebra with basis a, b, ab.
pub const TAU_AB_3X3: &str = "\
64/9*alpha^2 - 16/9*alpha - 1/3, 8/3*alpha, 32/9*alpha^2 + 4/9*alpha - 2/3
8/9 - 8/9*alpha, -1/3, -4/9*alpha - 2/9
-32/9*alpha - 4/9, -4/3, -16/9*alpha + 1/9";

/// A printed coefficient `num/den * poly`.
pub type Scaled = ((i64, i64), &'static str);

/// Printed characteristic polynomial of `tau_a tau_b`, coefficients of x^0..x^8.
pub const CHARPOLY_TAU_AB: [Scaled; 9] = [
    ((1, 1), "1"),
    ((-8, 9), "8*alpha^2 + 2*alpha + 1"),
    ((4, 27), "256*alpha^3 - 48*alpha^2 - 24*alpha + 5"),
    ((-4, 81), "1024*alpha^4 + 512*alpha^3 - 336*alpha^2 - 100*alpha + 34"),
    ((2, 81), "4096*alpha^4 - 1024*alpha^3 - 192*alpha^2 + 32*alpha - 77"),
    ((-4, 81), "1024*alpha^4 + 512*alpha^3 - 336*alpha^2 - 100*alpha + 34"),
    ((4, 27), "256*alpha^3 - 48*alpha^2 - 24*alpha + 5"),
    ((-8, 9), "8*alpha^2 + 2*alpha + 1"),
    ((1, 1), "1"),
];

/// Printed minimal polynomial of `tau_a tau_b^{tau_c}` at alpha=beta=gamma=-1/8,
/// coefficients of x^0..x^5 as polynomials in psi.
pub const MINPOLY_CONJUGATE: [Scaled; 6] = [
    ((-1, 1), "1"),
    ((1, 81), "-1024*psi^2 + 32*psi + 101"),
    ((1, 243), "-32768/3*psi^3 - 1024*psi^2 + 1120*psi + 404/3"),
    ((1, 243), "-32768/3*psi^3 - 1024*psi^2 + 1120*psi + 404/3"),
    ((1, 81), "-1024*psi^2 + 32*psi + 101"),
    ((1, 1), "1"),
];

/// Printed `(tau_ab^2)_{1,1} - 1` and `(tau_ab^2)_{1,2}`; `F1` carries the constant -1 separately.
pub const F1: Scaled = ((1, 81), "4096*alpha^4 - 3072*alpha^3 - 576*alpha^2 + 464*alpha + 33");
pub const F2: Scaled = ((1, 27), "512*alpha^3 - 256*alpha^2 - 64*alpha + 24");

/// Printed `9 (tau_ab^2 x_i - x_i)` at alpha = 1/4; row i is the image of basis vector i.
pub const DEFECT_X9: &str = "\
0, 0, 0, 0, 0, 0, 0, 0
0, 0, 0, 0, 0, 0, 0, 0
-16/3*beta + 32/3*gamma - 64/3*psi, 32/3*beta - 16/3*gamma - 64/3*psi, -16, -64/3*beta - 64/3*gamma + 128/3*psi, 8, 8, 16, 16
0, 0, 0, 0, 0, 0, 0, 0
-20/3*beta - 32/3*gamma + 64/3*psi, 40/3*beta - 20/3*gamma - 8/3*psi, 1, -8/3*beta + 64/3*gamma - 128/3*psi, -14, 4, 8, 8
-20/3*beta + 40/3*gamma - 8/3*psi, -32/3*beta - 20/3*gamma + 64/3*psi, 1, 64/3*beta - 8/3*gamma - 128/3*psi, 4, -14, 8, 8
-16/3*beta - 4/3*gamma + 44/3*psi, -4/3*beta + 38/3*gamma - 64/3*psi, 1/2, 44/3*beta - 64/3*gamma + 56/3*psi, 2, 2, -14, 4
38/3*beta - 4/3*gamma - 64/3*psi, -4/3*beta - 16/3*gamma + 44/3*psi, 1/2, -64/3*beta + 44/3*gamma + 56/3*psi, 2, 2, 4, -14";

/// Printed row echelon form of the last four columns of `DEFECT_X9` (nonzero rows).
pub const DEFECT_ECHELON: [[i64; 4]; 4] = [[8, 8, 16, 16], [0, 18, 36, 36], [0, 0, 36, 36], [0, 0, 0, 18]];

/// One printed F_5 parameter row with its group and Gram rank.
#[derive(Clone, Copy, Debug)]
pub struct Prop6Row {
    pub params: [i64; 4],
    pub group: &'static str,
    pub gram_rank: usize,
}

pub const PROP6_ROWS: [Prop6Row; 8] = [
    Prop6Row { params: [3, 4, 1, 1], group: "5^2:(5^2:(SL(2,5):2))", gram_rank: 4 },
    Prop6Row { params: [3, 1, 3, 2], group: "5^5:A5", gram_rank: 5 },
    Prop6Row { params: [3, 0, 4, 4], group: "5^5:S5", gram_rank: 5 },
    Prop6Row { params: [3, 3, 4, 4], group: "PSL(2,7)", gram_rank: 8 },
    Prop6Row { params: [3, 3, 1, 0], group: "PSL(3,5)", gram_rank: 8 },
    Prop6Row { params: [1, 3, 1, 0], group: "PSU(3,5)", gram_rank: 8 },
    Prop6Row { params: [3, 3, 1, 1], group: "A6", gram_rank: 8 },
    Prop6Row { params: [3, 3, 1, 4], group: "A7", gram_rank: 8 },
];

/// Printed `(q, alpha, beta, gamma, psi)` rows for PSL(3,q) and PSU(3,q).
pub const PSL3_ROWS: [(u64, [i64; 4]); 3] = [(7, [6, 2, 1, 5]), (11, [1, 1, 3, 0]), (13, [8, 10, 4, 2])];
pub const PSU3_ROWS: [(u64, [i64; 4]); 3] = [(7, [6, 2, 1, 1]), (11, [1, 1, 3, 1]), (13, [8, 10, 4, 1])];

/// psi values at alpha=beta=gamma=-1/8 with `|tau_a tau_b^{tau_c}|` dividing 3, 4, 5, 6.
/// The third lies in Q(sqrt 5) and is given as coordinates on (1, sqrt 5).
pub const STATEMENT_PSI: [(u64, [(i64, i64); 2]); 4] = [
    (3, [(5, 32), (0, 1)]),
    (4, [(-1, 8), (0, 1)]),
    (5, [(1, 64), (-9, 64)]),
    (6, [(-13, 32), (0, 1)]),
];

/// Gamma for the A5 setup, `1/16 - 3 sqrt5/16`, on (1, sqrt 5).
pub const A5_GAMMA: [(i64, i64); 2] = [(1, 16), (-3, 16)];

/// Printed psi values for the A5 setup with the order of `tau_a tau_d` they give.
pub const A5_PSI: [([(i64, i64); 2], u64); 4] = [
    ([(-1, 32), (-3, 32)], 5),
    ([(-1, 32), (6, 32)], 5),
    ([(-10, 32), (-3, 32)], 10),
    ([(-5, 16), (3, 16)], 10),
];

/// Targets for the angle `(a, d)`: the order-5 and order-10 alpha values, in the printed order.
pub const A5_TARGETS: [[(i64, i64); 2]; 4] = [[(1, 16), (3, 16)], [(1, 16), (-3, 16)], [(7, 16), (3, 16)], [(7, 16), (-3, 16)]];
