//! Decorated oriented one-dimensional cobordisms: composition, evaluation of
//! closed diagrams, and dimensions of state and hom spaces.

mod diagram;
mod spanning;

pub use diagram::{compose, evaluate_closed, Component, Diagram, End, Evaluator, Sign, SignSeq};
pub use spanning::{
    closure_matrix, equal_by_closures, hom_dim, hom_dim_with, spanning_diagrams, state_space_dim, state_space_dim_with,
    Decorations, DEFAULT_SIZE_BOUND,
};
