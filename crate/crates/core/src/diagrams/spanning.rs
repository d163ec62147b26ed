//! Spanning sets of `A(ε)` and dimensions by Gram rank.

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::series::Word;
use crate::universal::{build_pair_algebra, Theory};

use super::diagram::{compose, Component, Diagram, End, Evaluator, Sign, SignSeq};

pub const DEFAULT_SIZE_BOUND: usize = 8;

/// Decorations used to build spanning diagrams.
#[derive(Clone, Debug)]
pub struct Decorations {
    /// Words whose `(φ, ρ)` images span those of all words.
    pub arc_words: Vec<Word>,
    /// Words whose classes form a basis of `A(+)`.
    pub half_words: Vec<Word>,
}

impl Decorations {
    pub fn for_theory(t: &Theory) -> Result<Decorations> {
        let pa = build_pair_algebra(t)?;
        Ok(Decorations { arc_words: pa.arc_words().to_vec(), half_words: pa.state_space().word_basis().to_vec() })
    }
}

/// All partial matchings of the points, pairing only opposite signs.
fn matchings(eps: &SignSeq) -> Vec<Vec<Option<usize>>> {
    fn go(
        eps: &SignSeq,
        partner: &mut Vec<Option<usize>>,
        done: &mut Vec<bool>,
        i: usize,
        out: &mut Vec<Vec<Option<usize>>>,
    ) {
        if i == eps.len() {
            out.push(partner.clone());
            return;
        }
        if done[i] {
            go(eps, partner, done, i + 1, out);
            return;
        }
        done[i] = true;
        go(eps, partner, done, i + 1, out);
        for j in i + 1..eps.len() {
            if !done[j] && eps.0[j] != eps.0[i] {
                done[j] = true;
                partner[i] = Some(j);
                partner[j] = Some(i);
                go(eps, partner, done, i + 1, out);
                partner[i] = None;
                partner[j] = None;
                done[j] = false;
            }
        }
        done[i] = false;
    }
    let mut out = Vec::new();
    go(eps, &mut vec![None; eps.len()], &mut vec![false; eps.len()], 0, &mut out);
    out
}

/// Spanning diagrams `∅ → ε` (`upper = true`) or `ε → ∅` (`upper = false`).
pub fn spanning_diagrams(eps: &SignSeq, dec: &Decorations, upper: bool) -> Vec<Diagram> {
    // Is point i a strand head? Top + and bottom - points are.
    let is_head = |i: usize| (eps.0[i] == Sign::Plus) == upper;
    let at = |i: usize| if upper { End::Top(i) } else { End::Bottom(i) };
    let mut out = Vec::new();
    for m in matchings(eps) {
        // One slot per arc (keyed by its head) and per unmatched point.
        let mut slots: Vec<(usize, Option<usize>)> = Vec::new();
        for (i, p) in m.iter().enumerate() {
            match p {
                None => slots.push((i, None)),
                Some(j) if is_head(i) => slots.push((i, Some(*j))),
                Some(_) => {}
            }
        }
        let sizes: Vec<usize> =
            slots.iter().map(|(_, p)| if p.is_some() { dec.arc_words.len() } else { dec.half_words.len() }).collect();
        if sizes.contains(&0) {
            continue;
        }
        let mut choice = vec![0usize; slots.len()];
        loop {
            let components = slots
                .iter()
                .zip(&choice)
                .map(|(&(i, p), &c)| match p {
                    Some(j) => Component::strand(at(j), at(i), dec.arc_words[c].clone()),
                    None if is_head(i) => Component::strand(End::Inner(None), at(i), dec.half_words[c].clone()),
                    None => Component::strand(at(i), End::Inner(None), dec.half_words[c].clone()),
                })
                .collect();
            let d = if upper {
                Diagram::new(SignSeq::empty(), eps.clone(), components)
            } else {
                Diagram::new(eps.clone(), SignSeq::empty(), components)
            };
            out.push(d.expect("spanning diagrams are well formed"));
            let mut pos = 0;
            while pos < choice.len() {
                choice[pos] += 1;
                if choice[pos] < sizes[pos] {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
    }
    out
}

fn check_size(eps: &SignSeq, bound: usize) -> Result<()> {
    if eps.len() > bound {
        return Err(Error::SizeBound { size: eps.len(), bound });
    }
    Ok(())
}

/// Matrix of closure values `⟨x | d | y⟩` over spanning `x: ∅ → bottom` and cospanning `y: top → ∅`.
pub fn closure_matrix(ev: &Evaluator, dec: &Decorations, d: &Diagram) -> Result<Matrix> {
    let below = spanning_diagrams(d.bottom(), dec, true);
    let above = spanning_diagrams(d.top(), dec, false);
    let f = ev.theory().field();
    let mut rows = Vec::with_capacity(below.len());
    for x in &below {
        let xd = compose(x, d)?;
        let row = above.iter().map(|y| compose(&xd, y).and_then(|c| ev.evaluate(&c))).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Matrix::from_rows(f, rows, above.len())
}

/// Whether two parallel diagrams agree under every closure.
pub fn equal_by_closures(t: &Theory, d1: &Diagram, d2: &Diagram) -> Result<bool> {
    if d1.bottom() != d2.bottom() || d1.top() != d2.top() {
        return Err(Error::BoundaryMismatch(format!(
            "{} -> {} versus {} -> {}",
            d1.bottom(),
            d1.top(),
            d2.bottom(),
            d2.top()
        )));
    }
    let ev = Evaluator::new(t);
    let dec = Decorations::for_theory(t)?;
    Ok(closure_matrix(&ev, &dec, d1)? == closure_matrix(&ev, &dec, d2)?)
}

pub fn state_space_dim(t: &Theory, eps: &SignSeq) -> Result<usize> {
    state_space_dim_with(t, eps, DEFAULT_SIZE_BOUND)
}

/// Rank of the Gram matrix between spanning diagrams of `A(ε)` and their mirrors.
pub fn state_space_dim_with(t: &Theory, eps: &SignSeq, bound: usize) -> Result<usize> {
    check_size(eps, bound)?;
    let ev = Evaluator::new(t);
    let dec = Decorations::for_theory(t)?;
    Ok(closure_matrix(&ev, &dec, &Diagram::identity(eps))?.rank())
}

pub fn hom_dim(t: &Theory, eps: &SignSeq, eps2: &SignSeq) -> Result<usize> {
    hom_dim_with(t, eps, eps2, DEFAULT_SIZE_BOUND)
}

pub fn hom_dim_with(t: &Theory, eps: &SignSeq, eps2: &SignSeq, bound: usize) -> Result<usize> {
    state_space_dim_with(t, &eps.dual().concat(eps2), bound)
}
