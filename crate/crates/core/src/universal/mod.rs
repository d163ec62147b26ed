//! The universal construction for a theory of decorated intervals and circles:
//! the state space `A(+)`, the trace series, the algebra `A(+-) ≅ I × K` and
//! the symmetric Frobenius algebra `K`.

mod pair_algebra;
mod state_space;
mod theory;

pub use pair_algebra::{
    build_pair_algebra, build_pair_algebra_with, invariant_triple, IdempotentReport, Limits, PairAlgebra, Triple,
};
pub use state_space::{interval_trace_series, minimize, StateSpace};
pub use theory::{circular_from_rational, constant_circular, Theory};

use crate::error::Result;
use crate::exactla::Scalar;
use crate::frobenius::FrobeniusAlgebra;
use crate::series::Word;

/// `K` coordinates of `p*(w)`.
pub fn project_word(pa: &PairAlgebra, w: &Word) -> Result<Vec<Scalar>> {
    pa.project_word(w)
}

/// Circle-closure trace of an element of `K`.
pub fn trace_k(pa: &PairAlgebra, x: &[Scalar]) -> Scalar {
    pa.trace_k(x)
}

pub fn frobenius_of_k(pa: &PairAlgebra) -> FrobeniusAlgebra {
    pa.frobenius_of_k()
}

pub fn idempotent_report(pa: &PairAlgebra) -> IdempotentReport {
    pa.idempotent_report()
}
