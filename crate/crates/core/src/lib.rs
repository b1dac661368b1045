//! Exact computations with 3-generated axial pseudo-composition algebras:
//! the universal 8-dimensional algebra, its Miyamoto involutions, and the
//! matrix groups they generate over Q, number fields and prime fields.

pub mod scalars;
pub mod poly;
pub mod linalg;
pub mod algebra;
pub mod reference;
pub mod roots;
pub mod group;
pub mod ideals;
pub mod sweep;
pub mod repro;

mod util;
