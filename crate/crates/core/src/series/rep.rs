//! Matrix realizations of interval and circular series.

use super::word::{check_word, CyclicWord, Word};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};

/// A weighted automaton `(λ, μ, γ)` with value `λ μ(w_1) ... μ(w_n) γ` on a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRepresentation {
    field: Field,
    dim: usize,
    init: Matrix,
    letters: Vec<Matrix>,
    fin: Matrix,
}

impl LinearRepresentation {
    pub fn new(init: Matrix, letters: Vec<Matrix>, fin: Matrix) -> Result<LinearRepresentation> {
        let field = init.field();
        let n = init.cols();
        if init.rows() != 1 {
            return Err(Error::InvalidInput("initial vector must be a single row".into()));
        }
        if fin.cols() != 1 || fin.rows() != n {
            return Err(Error::InvalidInput(format!(
                "final vector must be {n}x1, found {}x{}",
                fin.rows(),
                fin.cols()
            )));
        }
        for m in letters.iter().chain([&fin]) {
            if m.field() != field {
                return Err(Error::FieldMismatch { expected: field, found: m.field() });
            }
        }
        for (a, m) in letters.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::InvalidInput(format!(
                    "letter {a} matrix must be {n}x{n}, found {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(LinearRepresentation { field, dim: n, init, letters, fin })
    }

    /// The zero series on `size` letters.
    pub fn zero(field: Field, size: usize) -> LinearRepresentation {
        LinearRepresentation {
            field,
            dim: 0,
            init: Matrix::zeros(field, 1, 0),
            letters: vec![Matrix::zeros(field, 0, 0); size],
            fin: Matrix::zeros(field, 0, 1),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters.len()
    }

    pub fn init(&self) -> &Matrix {
        &self.init
    }

    pub fn letters(&self) -> &[Matrix] {
        &self.letters
    }

    pub fn fin(&self) -> &Matrix {
        &self.fin
    }

    /// `μ(w)`, the product of letter matrices.
    pub fn word_matrix(&self, w: &Word) -> Result<Matrix> {
        check_word(w, self.letters.len())?;
        let mut m = Matrix::identity(self.field, self.dim);
        for &a in w.letters() {
            m = m.mul(&self.letters[a])?;
        }
        Ok(m)
    }

    /// `λ μ(w)` as a row vector.
    pub fn forward(&self, w: &Word) -> Result<Vec<Scalar>> {
        check_word(w, self.letters.len())?;
        let mut v = self.init.clone();
        for &a in w.letters() {
            v = v.mul(&self.letters[a])?;
        }
        Ok(v.row(0).to_vec())
    }

    /// `μ(w) γ` as a column vector.
    pub fn backward(&self, w: &Word) -> Result<Vec<Scalar>> {
        check_word(w, self.letters.len())?;
        let mut v = self.fin.clone();
        for &a in w.letters().iter().rev() {
            v = self.letters[a].mul(&v)?;
        }
        Ok(v.column(0))
    }

    pub fn eval(&self, w: &Word) -> Result<Scalar> {
        let f = self.forward(w)?;
        Ok(crate::exactla::dot(self.field, &f, &self.fin.column(0)))
    }
}

/// Value of a decorated floating interval.
pub fn eval_interval(rep: &LinearRepresentation, w: &Word) -> Result<Scalar> {
    rep.eval(w)
}

/// A circular series `w ↦ tr(D ρ(w))`.
///
/// Cyclic invariance needs `tr(D ρ(u) ρ(v)) = tr(D ρ(v) ρ(u))`. Construction
/// accepts a weight `D` commuting with every letter matrix, or letter matrices
/// that commute with each other (the one-letter case always qualifies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularRepresentation {
    field: Field,
    dim: usize,
    letters: Vec<Matrix>,
    weight: Matrix,
}

impl CircularRepresentation {
    pub fn new(letters: Vec<Matrix>, weight: Matrix) -> Result<CircularRepresentation> {
        let field = weight.field();
        let m = weight.rows();
        if !weight.is_square() {
            return Err(Error::NotSquare { rows: weight.rows(), cols: weight.cols() });
        }
        for (a, r) in letters.iter().enumerate() {
            if r.field() != field {
                return Err(Error::FieldMismatch { expected: field, found: r.field() });
            }
            if r.rows() != m || r.cols() != m {
                return Err(Error::InvalidInput(format!(
                    "circular letter {a} must be {m}x{m}, found {}x{}",
                    r.rows(),
                    r.cols()
                )));
            }
        }
        let weight_commutes = letters
            .iter()
            .map(|r| weight.commutator(r).map(|c| c.is_zero()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|x| x);
        if !weight_commutes {
            for (i, a) in letters.iter().enumerate() {
                for b in &letters[i + 1..] {
                    if !a.commutator(b)?.is_zero() {
                        return Err(Error::InvalidInput(
                            "weight must commute with every letter matrix, or the letter matrices with each other"
                                .into(),
                        ));
                    }
                }
            }
        }
        Ok(CircularRepresentation { field, dim: m, letters, weight })
    }

    pub fn zero(field: Field, size: usize) -> CircularRepresentation {
        CircularRepresentation {
            field,
            dim: 0,
            letters: vec![Matrix::zeros(field, 0, 0); size],
            weight: Matrix::zeros(field, 0, 0),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Matrix] {
        &self.letters
    }

    pub fn weight(&self) -> &Matrix {
        &self.weight
    }

    /// `ρ(w)`.
    pub fn word_matrix(&self, w: &Word) -> Result<Matrix> {
        check_word(w, self.letters.len())?;
        let mut m = Matrix::identity(self.field, self.dim);
        for &a in w.letters() {
            m = m.mul(&self.letters[a])?;
        }
        Ok(m)
    }

    /// `tr(D ρ(w))` for a linear word; invariant under rotation.
    pub fn eval_word(&self, w: &Word) -> Result<Scalar> {
        self.weight.mul(&self.word_matrix(w)?)?.trace()
    }

    pub fn eval(&self, w: &CyclicWord) -> Result<Scalar> {
        self.eval_word(w.canonical())
    }
}

/// Value of a decorated floating circle.
pub fn eval_cyclic(crep: &CircularRepresentation, w: &CyclicWord) -> Result<Scalar> {
    crep.eval(w)
}
