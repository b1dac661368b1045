use std::hash::Hash;

use crate::linalg::ExactMatrix;
use crate::scalars::{Field, Fp};

/// Arithmetic of one concrete matrix representation used for enumeration.
pub trait GroupRep: Sync {
    type Elem: Clone + Eq + Hash + Send + Sync;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;

    fn is_identity(&self, x: &Self::Elem) -> bool {
        *x == self.identity()
    }

    /// `x^-1 y^-1 x y`
    fn commutator(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(&self.inv(&yx), &xy)
    }

    /// `g^-1 x g`
    fn conjugate(&self, x: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.inv(g), &self.mul(x, g))
    }
}

/// Matrix of size at most 8 over F_p with p < 16, stored as 64 nibbles
/// with row stride 8.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Packed(pub [u64; 4]);

#[derive(Clone, Debug)]
pub struct SmallFpRep {
    n: usize,
    p: u32,
}

impl SmallFpRep {
    pub const MAX_PRIME: u64 = 15;
    pub const MAX_DIM: usize = 8;

    pub fn new(n: usize, p: u64) -> Option<Self> {
        (n <= Self::MAX_DIM && p <= Self::MAX_PRIME).then_some(SmallFpRep { n, p: p as u32 })
    }

    #[inline]
    fn unpack(x: &Packed) -> [u8; 64] {
        let mut out = [0u8; 64];
        for (k, o) in out.iter_mut().enumerate() {
            *o = ((x.0[k >> 4] >> ((k & 15) * 4)) & 15) as u8;
        }
        out
    }

    #[inline]
    fn pack(a: &[u8; 64]) -> Packed {
        let mut w = [0u64; 4];
        for (k, &v) in a.iter().enumerate() {
            w[k >> 4] |= (v as u64) << ((k & 15) * 4);
        }
        Packed(w)
    }

    pub fn encode(&self, m: &ExactMatrix<Fp>) -> Packed {
        let mut a = [0u8; 64];
        for i in 0..self.n {
            for j in 0..self.n {
                a[i * 8 + j] = m.get(i, j).value() as u8;
            }
        }
        Self::pack(&a)
    }

    pub fn decode(&self, x: &Packed) -> Vec<Vec<u64>> {
        let a = Self::unpack(x);
        (0..self.n).map(|i| (0..self.n).map(|j| a[i * 8 + j] as u64).collect()).collect()
    }
}

impl GroupRep for SmallFpRep {
    type Elem = Packed;

    fn identity(&self) -> Packed {
        let mut a = [0u8; 64];
        for i in 0..self.n {
            a[i * 8 + i] = 1;
        }
        Self::pack(&a)
    }

    fn mul(&self, x: &Packed, y: &Packed) -> Packed {
        let a = Self::unpack(x);
        let b = Self::unpack(y);
        let mut c = [0u8; 64];
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u32;
                for k in 0..n {
                    s += a[i * 8 + k] as u32 * b[k * 8 + j] as u32;
                }
                c[i * 8 + j] = (s % self.p) as u8;
            }
        }
        Self::pack(&c)
    }

    fn inv(&self, x: &Packed) -> Packed {
        let rows = self.decode(x);
        let inv = invert_mod_p(rows, self.p as u64).expect("group elements are invertible");
        let mut a = [0u8; 64];
        for i in 0..self.n {
            for j in 0..self.n {
                a[i * 8 + j] = inv[i][j] as u8;
            }
        }
        Self::pack(&a)
    }
}

/// Matrices over F_p for any prime below 2^31, row-major.
#[derive(Clone, Debug)]
pub struct LargeFpRep {
    n: usize,
    p: u64,
}

impl LargeFpRep {
    pub fn new(n: usize, p: u64) -> Self {
        assert!(p < 1 << 31, "prime must fit in 31 bits");
        LargeFpRep { n, p }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn from_rows(&self, rows: &[Vec<u64>]) -> Box<[u32]> {
        rows.iter().flatten().map(|&v| (v % self.p) as u32).collect()
    }
}

impl GroupRep for LargeFpRep {
    type Elem = Box<[u32]>;

    fn identity(&self) -> Box<[u32]> {
        (0..self.n * self.n).map(|k| u32::from(k % (self.n + 1) == 0)).collect()
    }

    fn mul(&self, x: &Box<[u32]>, y: &Box<[u32]>) -> Box<[u32]> {
        let n = self.n;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                // each product is below 2^62, so four fit before reducing
                let mut s = 0u64;
                for k in 0..n {
                    s += x[i * n + k] as u64 * y[k * n + j] as u64;
                    if k & 3 == 3 {
                        s %= self.p;
                    }
                }
                out[i * n + j] = (s % self.p) as u32;
            }
        }
        out.into_boxed_slice()
    }

    fn inv(&self, x: &Box<[u32]>) -> Box<[u32]> {
        let rows: Vec<Vec<u64>> = x.chunks(self.n).map(|r| r.iter().map(|&v| v as u64).collect()).collect();
        let inv = invert_mod_p(rows, self.p).expect("group elements are invertible");
        self.from_rows(&inv)
    }
}

/// Exact matrices over any field with hashable elements.
#[derive(Clone)]
pub struct ExactRep<T> {
    identity: ExactMatrix<T>,
}

impl<T: Field + Eq + Hash> ExactRep<T> {
    pub fn new(n: usize, sample: &T) -> Self {
        ExactRep { identity: ExactMatrix::identity(n, sample) }
    }
}

impl<T: Field + Eq + Hash> GroupRep for ExactRep<T> {
    type Elem = ExactMatrix<T>;

    fn identity(&self) -> ExactMatrix<T> {
        self.identity.clone()
    }

    fn mul(&self, x: &ExactMatrix<T>, y: &ExactMatrix<T>) -> ExactMatrix<T> {
        x.mul(y)
    }

    fn inv(&self, x: &ExactMatrix<T>) -> ExactMatrix<T> {
        x.inverse().expect("group elements are invertible")
    }

    fn is_identity(&self, x: &ExactMatrix<T>) -> bool {
        x.is_identity()
    }
}

/// Gauss-Jordan inverse over F_p; `None` if singular.
pub fn invert_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> Option<Vec<Vec<u64>>> {
    use crate::scalars::fp::{mul_mod, pow_mod};
    let n = a.len();
    let mut inv: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for c in 0..n {
        let r = (c..n).find(|&r| a[r][c] % p != 0)?;
        a.swap(c, r);
        inv.swap(c, r);
        let f = pow_mod(a[c][c], p - 2, p);
        for j in 0..n {
            a[c][j] = mul_mod(a[c][j], f, p);
            inv[c][j] = mul_mod(inv[c][j], f, p);
        }
        for i in 0..n {
            if i != c && a[i][c] != 0 {
                let g = a[i][c];
                for j in 0..n {
                    a[i][j] = (a[i][j] + p - mul_mod(g, a[c][j], p)) % p;
                    inv[i][j] = (inv[i][j] + p - mul_mod(g, inv[c][j], p)) % p;
                }
            }
        }
    }
    Some(inv)
}
