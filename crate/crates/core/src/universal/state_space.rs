//! Minimal model of the state space of one upward point.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::exactla::{dot, Field, Matrix, Scalar, SpanBasis};
use crate::series::{check_word, CircularRepresentation, LinearRepresentation, Word};

/// The state space `A(+)` as a cyclic module over the free algebra on the
/// alphabet, with its trace functional.
///
/// Basis vector `i` is the class of `word_basis[i]`. The class of `aω` is
/// `action[a]` applied to the class of `ω`, so the class of a word is the
/// product of the letter actions applied to `cyclic`, the class of the empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    field: Field,
    action: Vec<Matrix>,
    cyclic: Vec<Scalar>,
    cotrace: Vec<Scalar>,
    word_basis: Vec<Word>,
}

impl StateSpace {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.word_basis.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn cyclic(&self) -> &[Scalar] {
        &self.cyclic
    }

    pub fn cotrace(&self) -> &[Scalar] {
        &self.cotrace
    }

    pub fn word_basis(&self) -> &[Word] {
        &self.word_basis
    }

    /// `φ(w)`: the action of `w` on `A(+)`.
    pub fn word_action(&self, w: &Word) -> Result<Matrix> {
        check_word(w, self.action.len())?;
        let mut m = Matrix::identity(self.field, self.dim());
        for &a in w.letters() {
            m = m.mul(&self.action[a])?;
        }
        Ok(m)
    }

    /// Coordinates of the class of `w`.
    pub fn class_of(&self, w: &Word) -> Result<Vec<Scalar>> {
        check_word(w, self.action.len())?;
        let mut v = self.cyclic.clone();
        for &a in w.letters().iter().rev() {
            v = self.action[a].apply(&v);
        }
        Ok(v)
    }

    /// `α_I(w)` recomputed from the model.
    pub fn eval(&self, w: &Word) -> Result<Scalar> {
        Ok(dot(self.field, &self.cotrace, &self.class_of(w)?))
    }

    /// The pairing `P[i][j] = α_I(ω_i ω_j)` on the word basis.
    pub fn pairing_matrix(&self) -> Result<Matrix> {
        let k = self.dim();
        let mut rows = Vec::with_capacity(k);
        for wi in &self.word_basis {
            let phi = self.word_action(wi)?;
            let covector = phi.transpose().apply(&self.cotrace);
            rows.push((0..k).map(|j| covector[j].clone()).collect::<Vec<_>>());
        }
        Matrix::from_rows(self.field, rows, k)
    }
}

/// Minimize a representation into the state space `A(+)`.
///
/// The forward space `span{λ μ(u)}` is saturated first; the class of a word
/// `ω` is then the vector of its pairings with that space. A basis of classes
/// is grown by prepending letters to accepted words, testing candidates in
/// length-then-lex order, which yields the first independent words in that order.
pub fn minimize(rep: &LinearRepresentation) -> StateSpace {
    let field = rep.field();
    let s = rep.alphabet_size();
    let n = rep.dim();

    let mut fwd = SpanBasis::new(field, n);
    let mut queue = vec![rep.forward(&Word::empty()).expect("empty word")];
    while let Some(v) = queue.pop() {
        if fwd.insert(&v).is_some() {
            let row = Matrix::row_vector(field, v);
            for a in 0..s {
                queue.push(row.mul(&rep.letters()[a]).expect("shapes").row(0).to_vec());
            }
        }
    }
    let forward = fwd.to_matrix();
    let class = |w: &Word| -> Vec<Scalar> { forward.apply(&rep.backward(w).expect("letters in range")) };

    let r = fwd.dim();
    let mut classes = SpanBasis::new(field, r);
    let mut word_basis = Vec::new();
    let mut pending: BTreeSet<(usize, Word)> = BTreeSet::new();
    pending.insert((0, Word::empty()));
    while let Some((_, w)) = pending.pop_first() {
        if classes.is_full() {
            break;
        }
        if classes.insert(&class(&w)).is_some() {
            for a in 0..s {
                let next = w.prepend(a);
                pending.insert((next.len(), next));
            }
            word_basis.push(w);
        }
    }

    let k = word_basis.len();
    let action = (0..s)
        .map(|a| {
            let cols: Vec<Vec<Scalar>> = word_basis
                .iter()
                .map(|w| {
                    classes.coordinates(&class(&w.prepend(a))).expect("classes are closed under the letter action")
                })
                .collect();
            Matrix::from_rows(field, cols, k).expect("square").transpose()
        })
        .collect();
    let mut cyclic = vec![field.zero(); k];
    if k > 0 {
        cyclic[0] = field.one();
    }
    let cotrace = word_basis.iter().map(|w| rep.eval(w).expect("in range")).collect();
    StateSpace { field, action, cyclic, cotrace, word_basis }
}

/// The circular series `ω ↦ tr(φ(ω))` of the trace on `A(+)`.
pub fn interval_trace_series(s: &StateSpace) -> CircularRepresentation {
    CircularRepresentation::new(s.action.clone(), Matrix::identity(s.field, s.dim())).expect("identity weight commutes")
}
