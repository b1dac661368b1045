//! The universal 3-generated axial pseudo-composition algebra, its
//! specializations, and Miyamoto involutions.

mod closure;
mod point;
mod table;

pub use point::ParameterPoint;
pub use table::{universal, AlgebraElement, AlgebraTable};

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("closure failed: {0}")]
    ClosureFailure(String),
    #[error("element is not an axis: fusion eigenvalue check failed")]
    NotAnAxis,
    #[error("matrix is not an algebra automorphism")]
    NotAutomorphism,
    #[error("basis subset {0:?} does not span a subalgebra")]
    NotSubalgebra(Vec<usize>),
    #[error("vector length {got} does not match algebra dimension {dim}")]
    DimensionMismatch { got: usize, dim: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Basis indices in the universal table.
pub mod basis {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const AB: usize = 3;
    pub const BC: usize = 4;
    pub const AC: usize = 5;
    pub const A_BC: usize = 6;
    pub const B_AC: usize = 7;
}

#[cfg(test)]
mod tests;
