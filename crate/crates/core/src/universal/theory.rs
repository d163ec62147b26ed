//! Theories: an interval series together with a circular series.

use super::state_space::{interval_trace_series, minimize};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::series::{
    canonical_rotation, rational_to_rep, Alphabet, CircularRepresentation, LinearRepresentation, RationalFunction1,
    Word,
};

/// An evaluation of decorated intervals and decorated circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    field: Field,
    alphabet: Alphabet,
    interval: LinearRepresentation,
    circular: CircularRepresentation,
    circular_is_trace: bool,
}

impl Theory {
    pub fn new(alphabet: Alphabet, interval: LinearRepresentation, circular: CircularRepresentation) -> Result<Theory> {
        let field = interval.field();
        if circular.field() != field {
            return Err(Error::FieldMismatch { expected: field, found: circular.field() });
        }
        for (what, size) in [("interval", interval.alphabet_size()), ("circular", circular.alphabet_size())] {
            if size != alphabet.len() {
                return Err(Error::AlphabetMismatch(format!(
                    "{what} series has {size} letters, alphabet has {}",
                    alphabet.len()
                )));
            }
        }
        Ok(Theory { field, alphabet, interval, circular, circular_is_trace: false })
    }

    /// The theory whose circles evaluate to the trace on `A(+)`.
    pub fn trace_of_interval(alphabet: Alphabet, interval: LinearRepresentation) -> Result<Theory> {
        let circular = interval_trace_series(&minimize(&interval));
        let mut t = Theory::new(alphabet, interval, circular)?;
        t.circular_is_trace = true;
        Ok(t)
    }

    /// One-letter theory from generating functions of `a^n`-decorated
    /// intervals and circles.
    pub fn from_generating_functions(z_interval: &RationalFunction1, z_circular: &RationalFunction1) -> Result<Theory> {
        let interval = rational_to_rep(z_interval)?;
        let circular = circular_from_rational(z_circular)?;
        Theory::new(Alphabet::standard(1), interval, circular)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn interval(&self) -> &LinearRepresentation {
        &self.interval
    }

    pub fn circular(&self) -> &CircularRepresentation {
        &self.circular
    }

    pub fn circular_is_trace(&self) -> bool {
        self.circular_is_trace
    }

    pub fn eval_interval(&self, w: &Word) -> Result<Scalar> {
        self.interval.eval(w)
    }

    pub fn eval_circle(&self, w: &Word) -> Result<Scalar> {
        self.circular.eval(&canonical_rotation(w))
    }
}

/// A circular representation of a one-letter series `Σ c_n a^n` given by a
/// rational function: `tr(γλ μ^n) = λ μ^n γ`.
pub fn circular_from_rational(z: &RationalFunction1) -> Result<CircularRepresentation> {
    let rep = rational_to_rep(z)?;
    let weight = rep.fin().mul(rep.init())?;
    CircularRepresentation::new(rep.letters().to_vec(), weight)
}

/// A circular representation with no letters and constant value `c` on the empty circle.
pub fn constant_circular(c: Scalar) -> CircularRepresentation {
    let f = c.field();
    CircularRepresentation::new(Vec::new(), Matrix::from_rows(f, vec![vec![c]], 1).expect("1x1")).expect("no letters")
}
