//! Symmetric Frobenius algebras: verification, dual bases, the window and
//! handle maps, the factorization of the window map through `B/[B,B]`,
//! thin-surface evaluation and the semisimplicity obstruction.

mod algebra;
mod embedding;
mod surface;

pub use algebra::{AxiomCheck, FrobeniusAlgebra, VerifyReport, Witness};
pub use embedding::{embedding_obstruction, EmbeddingReport};
pub use surface::{eval_surface, SurfaceComponent, SurfaceSpec};

use crate::error::Result;
use crate::exactla::{Matrix, Scalar, SpanBasis};

pub fn verify(b: &FrobeniusAlgebra) -> VerifyReport {
    b.verify()
}

/// A pair of bases as coordinate vectors.
pub type BasisPair = (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>);

/// The standard basis `{x_i}` and its dual `{y_i}` with `tr(x_i y_j) = δ_ij`.
pub fn dual_bases(b: &FrobeniusAlgebra) -> Result<BasisPair> {
    let y = b.dual_basis()?;
    let x = (0..b.dim()).map(|i| b.basis_vector(i)).collect();
    Ok((x, y))
}

/// `Σ_i y_i · a · x_i`.
pub fn window(b: &FrobeniusAlgebra, a: &[Scalar]) -> Result<Vec<Scalar>> {
    let y = b.dual_basis()?;
    let mut out = b.zero_element();
    for (i, yi) in y.iter().enumerate() {
        let term = b.mul(&b.mul(yi, a), &b.basis_vector(i));
        out = b.add(&out, &term);
    }
    Ok(out)
}

/// `E = Σ_i x_i y_i`, inserted by an undecorated boundary circle.
pub fn hole_element(b: &FrobeniusAlgebra) -> Result<Vec<Scalar>> {
    let y = b.dual_basis()?;
    let mut out = b.zero_element();
    for (i, yi) in y.iter().enumerate() {
        out = b.add(&out, &b.mul(&b.basis_vector(i), yi));
    }
    Ok(out)
}

/// `H = Σ_{i,j} x_i x_j y_i y_j`, inserted by a handle. Equals `E²` when `B` is commutative.
pub fn handle_element(b: &FrobeniusAlgebra) -> Result<Vec<Scalar>> {
    let y = b.dual_basis()?;
    let n = b.dim();
    let mut out = b.zero_element();
    for i in 0..n {
        for j in 0..n {
            let t = b.product_of(&[b.basis_vector(i), b.basis_vector(j), y[i].clone(), y[j].clone()]);
            out = b.add(&out, &t);
        }
    }
    Ok(out)
}

/// The window map as a matrix in the standard basis.
pub fn window_matrix(b: &FrobeniusAlgebra) -> Result<Matrix> {
    let n = b.dim();
    let cols = (0..n).map(|i| window(b, &b.basis_vector(i))).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(b.field(), cols, n)?.transpose())
}

/// The induced map `β_B : B/[B,B] → Z(B)` with the data used to build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaMap {
    pub commutator_basis: Vec<Vec<Scalar>>,
    pub center_basis: Vec<Vec<Scalar>>,
    /// Representatives in `B` of a basis of `B/[B,B]`.
    pub quotient_basis: Vec<Vec<Scalar>>,
    /// Column `q` holds the center coordinates of the window of `quotient_basis[q]`.
    pub matrix: Matrix,
    pub window_kills_commutators: bool,
    pub window_is_central: bool,
}

impl BetaMap {
    pub fn factorizes(&self) -> bool {
        self.window_kills_commutators && self.window_is_central
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Basis of the center, from the linear system `[z, x_j] = 0`.
pub fn center_basis(b: &FrobeniusAlgebra) -> Vec<Vec<Scalar>> {
    let n = b.dim();
    let c = b.structure_constants();
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| &c[i][j][k] - &c[j][i][k]).collect());
        }
    }
    Matrix::from_rows(b.field(), rows, n).expect("shape").kernel_basis()
}

pub fn commutator_basis(b: &FrobeniusAlgebra) -> Vec<Vec<Scalar>> {
    let n = b.dim();
    let c = b.structure_constants();
    let mut span = SpanBasis::new(b.field(), n);
    for i in 0..n {
        for j in (i + 1)..n {
            span.insert(&b.sub(&c[i][j], &c[j][i]));
        }
    }
    span.basis().to_vec()
}

pub fn beta_map(b: &FrobeniusAlgebra) -> Result<BetaMap> {
    let n = b.dim();
    let field = b.field();
    let commutators = commutator_basis(b);
    let center = center_basis(b);

    let mut ext = SpanBasis::new(field, n);
    for v in &commutators {
        ext.insert(v);
    }
    let mut quotient = Vec::new();
    for i in 0..n {
        let e = b.basis_vector(i);
        if ext.insert(&e).is_some() {
            quotient.push(e);
        }
    }

    let zero = b.zero_element();
    let mut kills = true;
    for v in &commutators {
        if window(b, v)? != zero {
            kills = false;
        }
    }

    let mut zspan = SpanBasis::new(field, n);
    for z in &center {
        zspan.insert(z);
    }
    let mut central = true;
    let mut cols = Vec::with_capacity(quotient.len());
    for q in &quotient {
        let w = window(b, q)?;
        match zspan.coordinates(&w) {
            Some(c) => cols.push(c),
            None => {
                central = false;
                cols.push(vec![field.zero(); center.len()]);
            }
        }
    }
    let matrix = Matrix::from_rows(field, cols, center.len())?.transpose();
    Ok(BetaMap {
        commutator_basis: commutators,
        center_basis: center,
        quotient_basis: quotient,
        matrix,
        window_kills_commutators: kills,
        window_is_central: central,
    })
}
