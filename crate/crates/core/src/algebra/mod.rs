//! Exact arithmetic over F2, F2[v] and monomials of F2[u,v].

mod f2;
mod poly;
mod snf;
mod sparse;

pub use f2::{kernel_basis_f2, BitVec, Reducer, F2};
pub use poly::{MonoUV, PolyV};
pub use snf::smith_normal_form;
pub use sparse::{Coefficient, SparseMat};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,
}
