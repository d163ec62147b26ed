//! Words, linear and circular representations of rational series, and
//! one-variable rational functions.

mod rational;
mod rep;
mod word;

pub use rational::{rational_to_rep, RationalFunction1};
pub use rep::{eval_cyclic, eval_interval, CircularRepresentation, LinearRepresentation};
pub use word::{canonical_rotation, Alphabet, CyclicWord, Word};

pub(crate) use word::check_word;
