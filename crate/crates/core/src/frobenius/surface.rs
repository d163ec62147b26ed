//! Evaluation of thin flat surfaces with decorated side boundary.

use super::{handle_element, window, FrobeniusAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};

/// A connected surface of some genus whose boundary circles carry cyclic
/// sequences of algebra elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub genus: usize,
    pub boundaries: Vec<Vec<Vec<Scalar>>>,
}

/// A disjoint union of components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceComponent {
    /// A disk with one boundary word.
    pub fn disk(word: Vec<Vec<Scalar>>) -> SurfaceComponent {
        SurfaceComponent { genus: 0, boundaries: vec![word] }
    }

    pub fn is_closed(&self) -> bool {
        self.boundaries.is_empty()
    }
}

/// Value of the surface: the product over components of
/// `tr(π(w_1) · H^g · Π_{j≥2} window(π(w_j)))`, where `π` multiplies the
/// elements of a boundary word in order and `H` is the handle element.
pub fn eval_surface(b: &FrobeniusAlgebra, s: &SurfaceSpec) -> Result<Scalar> {
    let mut value = b.field().one();
    let mut handle = None;
    for (n, c) in s.components.iter().enumerate() {
        if c.is_closed() {
            return Err(Error::ClosedComponent(format!("component {n} has no side boundary")));
        }
        check_word_elements(b, c)?;
        let mut x = b.product_of(&c.boundaries[0]);
        if c.genus > 0 {
            if handle.is_none() {
                handle = Some(handle_element(b)?);
            }
            x = b.mul(&x, &b.pow(handle.as_ref().expect("set above"), c.genus));
        }
        for w in &c.boundaries[1..] {
            x = b.mul(&x, &window(b, &b.product_of(w))?);
        }
        value *= &b.tr(&x);
    }
    Ok(value)
}

fn check_word_elements(b: &FrobeniusAlgebra, c: &SurfaceComponent) -> Result<()> {
    let f: Field = b.field();
    for w in &c.boundaries {
        for e in w {
            if e.len() != b.dim() {
                return Err(Error::InvalidInput(format!(
                    "boundary element has {} coordinates, algebra has dimension {}",
                    e.len(),
                    b.dim()
                )));
            }
            if let Some(x) = e.iter().find(|x| x.field() != f) {
                return Err(Error::FieldMismatch { expected: f, found: x.field() });
            }
        }
    }
    Ok(())
}
