//! Incremental spanning sets in `F^n`.

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// A growing list of linearly independent vectors, kept in echelon form so
/// that membership tests and coordinate extraction are cheap.
///
/// Vectors accepted by [`SpanBasis::insert`] are the *basis*; coordinates are
/// always expressed in that basis, in insertion order.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    field: Field,
    len: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Scalar>>,
    basis: Vec<Vec<Scalar>>,
}

impl SpanBasis {
    pub fn new(field: Field, len: usize) -> SpanBasis {
        SpanBasis { field, len, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.len
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Residual of `v` after elimination, with the coefficients used per echelon row.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut r = v.to_vec();
        let mut coefs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                for (x, y) in r.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
            }
            coefs.push(c);
        }
        (r, coefs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Add `v` if it is independent of the current basis. Returns its index.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<usize> {
        let (r, coefs) = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].inv().expect("nonzero pivot");
        let n = self.basis.len();
        let mut combo = vec![self.field.zero(); n + 1];
        combo[n] = self.field.one();
        for (c, old) in coefs.iter().zip(&self.combos) {
            if c.is_zero() {
                continue;
            }
            for (slot, o) in combo.iter_mut().zip(old) {
                *slot -= &(c * o);
            }
        }
        for c in self.combos.iter_mut() {
            c.push(self.field.zero());
        }
        self.combos.push(combo.iter().map(|x| x * &inv).collect());
        self.rows.push(r.iter().map(|x| x * &inv).collect());
        self.pivots.push(p);
        self.basis.push(v.to_vec());
        Some(n)
    }

    /// Coordinates of `v` in the accepted basis, `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (r, coefs) = self.reduce(v);
        if !r.iter().all(Scalar::is_zero) {
            return None;
        }
        let mut out = vec![self.field.zero(); self.basis.len()];
        for (c, combo) in coefs.iter().zip(&self.combos) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in out.iter_mut().zip(combo) {
                *slot += &(c * x);
            }
        }
        Some(out)
    }

    /// Basis vectors as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.basis.clone(), self.len).expect("consistent basis")
    }
}
