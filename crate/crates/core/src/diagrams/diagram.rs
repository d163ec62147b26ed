//! Decorated oriented one-dimensional cobordisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{dot, Scalar};
use crate::series::{check_word, Word};
use crate::universal::{minimize, StateSpace, Theory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A sign sequence. `+` points are crossed upward, `-` points downward.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignSeq(pub Vec<Sign>);

impl SignSeq {
    pub fn empty() -> SignSeq {
        SignSeq(Vec::new())
    }

    pub fn parse(s: &str) -> Result<SignSeq> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::InvalidInput(format!("sign sequence contains {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignSeq)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reverse and negate: the dual object.
    pub fn dual(&self) -> SignSeq {
        SignSeq(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    pub fn concat(&self, other: &SignSeq) -> SignSeq {
        SignSeq(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// Where a strand ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum End {
    Bottom(usize),
    Top(usize),
    /// An inner endpoint. Unlabelled heads close with the trace functional and
    /// unlabelled tails with the class of the empty word; a label `i` selects
    /// the `i`-th basis vector of `A(+)` (at a tail) or its dual (at a head).
    Inner(Option<usize>),
}

/// A connected component. Strand words are read from the head toward the tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Strand { tail: End, head: End, word: Word },
    Circle { word: Word },
}

impl Component {
    pub fn strand(tail: End, head: End, word: Word) -> Component {
        Component::Strand { tail, head, word }
    }

    pub fn circle(word: Word) -> Component {
        Component::Circle { word }
    }
}

/// A morphism `bottom → top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    bottom: SignSeq,
    top: SignSeq,
    components: Vec<Component>,
}

impl Diagram {
    /// Check that every boundary point is used once, with the orientation its sign demands:
    /// heads sit at top `+` and bottom `-` points, tails at top `-` and bottom `+` points.
    pub fn new(bottom: SignSeq, top: SignSeq, components: Vec<Component>) -> Result<Diagram> {
        let mut used_bottom = vec![false; bottom.len()];
        let mut used_top = vec![false; top.len()];
        for c in &components {
            if let Component::Strand { tail, head, .. } = c {
                for (end, is_head) in [(tail, false), (head, true)] {
                    let (used, seq, which) = match end {
                        End::Bottom(i) => (&mut used_bottom, &bottom, ("bottom", *i)),
                        End::Top(i) => (&mut used_top, &top, ("top", *i)),
                        End::Inner(_) => continue,
                    };
                    let (side, i) = which;
                    if i >= seq.len() {
                        return Err(Error::BoundaryMismatch(format!("{side} point {i} does not exist")));
                    }
                    if used[i] {
                        return Err(Error::BoundaryMismatch(format!("{side} point {i} is used twice")));
                    }
                    used[i] = true;
                    let wants_head = (side == "top") == (seq.0[i] == Sign::Plus);
                    if wants_head != is_head {
                        return Err(Error::OrientationClash(format!(
                            "{side} point {i} has sign {} but carries a strand {}",
                            SignSeq(vec![seq.0[i]]),
                            if is_head { "head" } else { "tail" }
                        )));
                    }
                }
            }
        }
        for (side, used) in [("bottom", &used_bottom), ("top", &used_top)] {
            if let Some(i) = used.iter().position(|u| !u) {
                return Err(Error::BoundaryMismatch(format!("{side} point {i} is not used")));
            }
        }
        Ok(Diagram { bottom, top, components })
    }

    pub fn bottom(&self) -> &SignSeq {
        &self.bottom
    }

    pub fn top(&self) -> &SignSeq {
        &self.top
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    /// The empty diagram on the empty sequence.
    pub fn empty() -> Diagram {
        Diagram { bottom: SignSeq::empty(), top: SignSeq::empty(), components: Vec::new() }
    }

    /// Undecorated vertical strands.
    pub fn identity(eps: &SignSeq) -> Diagram {
        let components = eps
            .0
            .iter()
            .enumerate()
            .map(|(i, s)| match s {
                Sign::Plus => Component::strand(End::Bottom(i), End::Top(i), Word::empty()),
                Sign::Minus => Component::strand(End::Top(i), End::Bottom(i), Word::empty()),
            })
            .collect();
        Diagram { bottom: eps.clone(), top: eps.clone(), components }
    }

    /// Side-by-side placement.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let (nb, nt) = (self.bottom.len(), self.top.len());
        let shift = |e: &End| match e {
            End::Bottom(i) => End::Bottom(i + nb),
            End::Top(i) => End::Top(i + nt),
            End::Inner(l) => End::Inner(*l),
        };
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| match c {
            Component::Strand { tail, head, word } => Component::strand(shift(tail), shift(head), word.clone()),
            Component::Circle { word } => Component::circle(word.clone()),
        }));
        Diagram { bottom: self.bottom.concat(&other.bottom), top: self.top.concat(&other.top), components }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Pt {
    Lower(usize),
    Upper(usize),
    Glue(usize),
    Inner(Option<usize>),
}

/// Stack `d2` on top of `d1`. Strands meeting at a glued point merge; the
/// part nearer the head contributes the first letters of the merged word.
pub fn compose(d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
    if d1.top != d2.bottom {
        return Err(Error::BoundaryMismatch(format!(
            "cannot stack a diagram with bottom {} on one with top {}",
            d2.bottom, d1.top
        )));
    }
    let lower = |e: &End| match e {
        End::Bottom(i) => Pt::Lower(*i),
        End::Top(i) => Pt::Glue(*i),
        End::Inner(l) => Pt::Inner(*l),
    };
    let upper = |e: &End| match e {
        End::Bottom(i) => Pt::Glue(*i),
        End::Top(i) => Pt::Upper(*i),
        End::Inner(l) => Pt::Inner(*l),
    };
    let mut strands: Vec<(Pt, Pt, Word)> = Vec::new();
    let mut circles: Vec<Word> = Vec::new();
    for (d, map) in [(d1, &lower as &dyn Fn(&End) -> Pt), (d2, &upper)] {
        for c in &d.components {
            match c {
                Component::Strand { tail, head, word } => strands.push((map(tail), map(head), word.clone())),
                Component::Circle { word } => circles.push(word.clone()),
            }
        }
    }
    for j in 0..d1.top.len() {
        let g = Pt::Glue(j);
        let x = strands.iter().position(|s| s.1 == g);
        let y = strands.iter().position(|s| s.0 == g);
        let (Some(x), Some(y)) = (x, y) else {
            return Err(Error::OrientationClash(format!("glued point {j} does not join a head to a tail")));
        };
        if x == y {
            let (_, _, w) = strands.remove(x);
            circles.push(w);
            continue;
        }
        let (hi, lo) = (x.max(y), x.min(y));
        let a = strands.remove(hi);
        let b = strands.remove(lo);
        let (sx, sy) = if x > y { (a, b) } else { (b, a) };
        strands.push((sx.0, sy.1, sy.2.concat(&sx.2)));
    }
    let back = |p: Pt| match p {
        Pt::Lower(i) => End::Bottom(i),
        Pt::Upper(i) => End::Top(i),
        Pt::Inner(l) => End::Inner(l),
        Pt::Glue(_) => unreachable!("all glued points were merged"),
    };
    let mut components: Vec<Component> =
        strands.into_iter().map(|(t, h, w)| Component::strand(back(t), back(h), w)).collect();
    components.extend(circles.into_iter().map(Component::circle));
    Diagram::new(d1.bottom.clone(), d2.top.clone(), components)
}

/// Evaluates closed diagrams in a fixed theory.
#[derive(Clone, Debug)]
pub struct Evaluator<'a> {
    theory: &'a Theory,
    state: StateSpace,
}

impl<'a> Evaluator<'a> {
    pub fn new(theory: &'a Theory) -> Evaluator<'a> {
        Evaluator { theory, state: minimize(theory.interval()) }
    }

    pub fn theory(&self) -> &Theory {
        self.theory
    }

    pub fn state_space(&self) -> &StateSpace {
        &self.state
    }

    fn label_vector(&self, label: Option<usize>, head: bool) -> Result<Vec<Scalar>> {
        let k = self.state.dim();
        match label {
            None if head => Ok(self.state.cotrace().to_vec()),
            None => Ok(self.state.cyclic().to_vec()),
            Some(i) if i < k => {
                let f = self.state.field();
                Ok((0..k).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            }
            Some(i) => Err(Error::InvalidInput(format!("inner label {i} exceeds the state space dimension {k}"))),
        }
    }

    /// Product of the component values.
    pub fn evaluate(&self, d: &Diagram) -> Result<Scalar> {
        if !d.is_closed() {
            return Err(Error::NotClosed(format!("boundary {} -> {}", d.bottom, d.top)));
        }
        let size = self.theory.alphabet().len();
        let f = self.theory.field();
        let mut value = f.one();
        for c in &d.components {
            let v = match c {
                Component::Circle { word } => self.theory.eval_circle(word)?,
                Component::Strand { tail: End::Inner(tl), head: End::Inner(hl), word } => {
                    check_word(word, size)?;
                    let mut v = self.label_vector(*tl, false)?;
                    for &a in word.letters().iter().rev() {
                        v = self.state.action()[a].apply(&v);
                    }
                    dot(f, &self.label_vector(*hl, true)?, &v)
                }
                Component::Strand { .. } => unreachable!("closed diagrams have no boundary ends"),
            };
            if v.is_zero() {
                return Ok(f.zero());
            }
            value *= &v;
        }
        Ok(value)
    }
}

/// Value of a closed diagram.
pub fn evaluate_closed(t: &Theory, d: &Diagram) -> Result<Scalar> {
    Evaluator::new(t).evaluate(d)
}
