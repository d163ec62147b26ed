//! Exact scalars, dense matrices and univariate polynomials over ℚ or `F_p`.

mod matrix;
mod poly;
mod scalar;
mod span;

pub use matrix::Matrix;
pub use poly::{poly_gcd_lcm, Polynomial};
pub use scalar::{Field, Scalar};
pub use span::SpanBasis;

pub use scalar::parse_rational;

/// Rank of a list of equal-length vectors.
pub fn rank_of(field: Field, vectors: &[Vec<Scalar>], len: usize) -> usize {
    let mut s = SpanBasis::new(field, len);
    for v in vectors {
        s.insert(v);
        if s.is_full() {
            break;
        }
    }
    s.dim()
}

/// Dot product of two equal-length slices.
pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}
