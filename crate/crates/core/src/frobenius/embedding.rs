//! The semisimplicity obstruction to realizing a trace inside a matrix algebra.

use super::FrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use num_traits::Signed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub semisimple: bool,
    /// Basis of the radical of the form `(a, b) ↦ tr(L_a L_b)`.
    pub radical_basis: Vec<Vec<Scalar>>,
    /// A nonzero radical element, when one exists.
    pub witness: Option<Vec<Scalar>>,
    /// Smallest `n` with `witness^n = 0`.
    pub witness_nilpotency: Option<usize>,
    /// `false` when the radical is nonzero: no trace-preserving embedding exists.
    pub embedding_possible: bool,
    pub trace_of_unit: Scalar,
    /// Informational only: whether `tr(1)` is a nonnegative integer.
    pub trace_of_unit_is_natural: bool,
}

/// Decide semisimplicity through the trace form of the regular representation.
/// Only characteristic 0 is supported.
pub fn embedding_obstruction(b: &FrobeniusAlgebra) -> Result<EmbeddingReport> {
    if b.field() != Field::Rational {
        return Err(Error::UnsupportedCharacteristic(b.field().characteristic()));
    }
    let n = b.dim();
    let mults: Vec<Matrix> = (0..n).map(|i| b.left_mult(&b.basis_vector(i))).collect();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| mults[i].mul(&mults[j]).and_then(|m| m.trace())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let form = Matrix::from_rows(b.field(), rows, n)?;
    let radical = form.kernel_basis();
    let witness = radical.first().cloned();
    let witness_nilpotency = witness.as_ref().and_then(|r| {
        let mut p = r.clone();
        for e in 1..=n + 1 {
            if p.iter().all(Scalar::is_zero) {
                return Some(e);
            }
            p = b.mul(&p, r);
        }
        None
    });
    let trace_of_unit = b.tr(b.unit());
    let natural = trace_of_unit.as_rational().is_some_and(|q| q.is_integer() && !q.is_negative());
    Ok(EmbeddingReport {
        semisimple: radical.is_empty(),
        embedding_possible: radical.is_empty(),
        radical_basis: radical,
        witness,
        witness_nilpotency,
        trace_of_unit,
        trace_of_unit_is_natural: natural,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Polynomial;

    const Q: Field = Field::Rational;

    #[test]
    fn dual_numbers_are_obstructed() {
        let f = Polynomial::from_i64(Q, &[0, 0, 1]);
        let b = FrobeniusAlgebra::polynomial_quotient(&f, vec![Q.zero(), Q.one()]).unwrap();
        assert!(b.verify().all_pass());
        let r = embedding_obstruction(&b).unwrap();
        assert!(!r.semisimple);
        assert!(!r.embedding_possible);
        assert_eq!(r.witness, Some(vec![Q.zero(), Q.one()]));
        assert_eq!(r.witness_nilpotency, Some(2));
    }

    #[test]
    fn matrices_are_semisimple() {
        let m = FrobeniusAlgebra::matrix_algebra(Q, 2, Q.one());
        let r = embedding_obstruction(&m).unwrap();
        assert!(r.semisimple);
        assert_eq!(r.trace_of_unit, Q.from_i64(2));
        assert!(r.trace_of_unit_is_natural);
        assert!(embedding_obstruction(&FrobeniusAlgebra::ground(Q.one())).unwrap().semisimple);
    }

    #[test]
    fn prime_fields_are_unsupported() {
        let b = FrobeniusAlgebra::cyclic_group(Field::prime(3).unwrap(), 3);
        assert_eq!(embedding_obstruction(&b), Err(Error::UnsupportedCharacteristic(3)));
    }
}
