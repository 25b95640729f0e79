//! Exact rings underlying the bracket and the conductance.

mod cyc8;
mod gauss;
mod laurent;

pub use cyc8::Cyc8;
pub use gauss::{ExtGauss, Gauss};
pub use laurent::LaurentPoly;

use alloc::boxed::Box;
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// A value expected in `Q(i)` carried odd powers of `zeta`.
    #[error("value is not a Gaussian rational (zeta coefficient {c1}, zeta^3 coefficient {c3})")]
    NotGaussian {
        c1: Box<BigRational>,
        c3: Box<BigRational>,
    },
    #[error("indeterminate form {0}")]
    Indeterminate(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParsePolyError {
    #[error("empty polynomial text")]
    Empty,
    #[error("malformed term at offset {offset}")]
    Syntax { offset: usize },
}
