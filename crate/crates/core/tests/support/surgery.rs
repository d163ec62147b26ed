//! Surface evaluation by literal local surgery, used as an oracle.
//!
//! Two boundary circles are joined by a tube, which becomes
//! `Σ_i [w1 x_i w2 y_i]`; on a single circle a handle is cut open into
//! `Σ_i [w x_i], [y_i]`; a disk evaluates to the trace of its word.

#![allow(clippy::needless_range_loop)]

use defekt_core::frobenius::FrobeniusAlgebra;
use defekt_core::{Matrix, Scalar};

pub struct Surgery<'a> {
    b: &'a FrobeniusAlgebra,
    x: Vec<Vec<Scalar>>,
    y: Vec<Vec<Scalar>>,
}

impl<'a> Surgery<'a> {
    /// The dual basis comes straight from the inverse Gram matrix.
    pub fn new(b: &'a FrobeniusAlgebra) -> Surgery<'a> {
        let n = b.dim();
        let f = b.field();
        let x: Vec<Vec<Scalar>> = (0..n).map(|i| b.basis_vector(i)).collect();
        let gram: Vec<Vec<Scalar>> = x.iter().map(|xi| x.iter().map(|xj| b.tr(&b.mul(xi, xj))).collect()).collect();
        let ginv = Matrix::from_rows(f, gram, n).unwrap().inverse().unwrap();
        let y = (0..n)
            .map(|j| {
                let mut v = b.zero_element();
                for k in 0..n {
                    v = b.add(&v, &b.scale(&x[k], ginv.get(k, j)));
                }
                v
            })
            .collect();
        Surgery { b, x, y }
    }

    fn product(&self, w: &[Vec<Scalar>]) -> Vec<Scalar> {
        w.iter().fold(self.b.unit().to_vec(), |acc, e| self.b.mul(&acc, e))
    }

    /// Value of a connected surface with at least one boundary circle.
    pub fn eval(&self, genus: usize, boundaries: &[Vec<Vec<Scalar>>]) -> Scalar {
        assert!(!boundaries.is_empty(), "closed surfaces are not evaluated by side-boundary surgery");
        let circles: Vec<Vec<Scalar>> = boundaries.iter().map(|w| self.product(w)).collect();
        self.eval_products(genus, &circles)
    }

    // A boundary word is kept as the product of its letters; gluing words is multiplication.
    fn eval_products(&self, genus: usize, circles: &[Vec<Scalar>]) -> Scalar {
        let b = self.b;
        let mut total = b.field().zero();
        if circles.len() >= 2 {
            for i in 0..self.x.len() {
                let merged = b.mul(&b.mul(&b.mul(&circles[0], &self.x[i]), &circles[1]), &self.y[i]);
                let mut rest = vec![merged];
                rest.extend(circles[2..].iter().cloned());
                total += &self.eval_products(genus, &rest);
            }
            return total;
        }
        if genus > 0 {
            for i in 0..self.x.len() {
                let w = b.mul(&circles[0], &self.x[i]);
                total += &self.eval_products(genus - 1, &[w, self.y[i].clone()]);
            }
            return total;
        }
        b.tr(&circles[0])
    }
}
