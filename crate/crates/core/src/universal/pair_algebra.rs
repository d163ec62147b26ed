//! The algebra of the sign sequence `+-` and its decomposition `I × K`.

use std::collections::BTreeSet;

use super::state_space::{minimize, StateSpace};
use super::theory::Theory;
use crate::error::{Error, Result};
use crate::exactla::{dot, rank_of, Field, Matrix, Scalar, SpanBasis};
use crate::frobenius::FrobeniusAlgebra;
use crate::series::{check_word, Alphabet, CircularRepresentation, Word};

/// Saturation controls.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    /// Longest word tried when saturating the arc span. Defaults to `k² + m² + 1`.
    pub max_word_len: Option<usize>,
    /// Letter order used when enumerating words. Defaults to the alphabet order.
    pub letter_order: Option<Vec<usize>>,
}

/// A pre-quotient element `(Φ, R, Y)`: `Φ` is the action of the arc part on
/// `A(+)`, `R` its circular data and `Y` the pure matrix part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub phi: Matrix,
    pub r: Matrix,
    pub y: Matrix,
}

impl Triple {
    pub fn zero(field: Field, k: usize, m: usize) -> Triple {
        Triple { phi: Matrix::zeros(field, k, k), r: Matrix::zeros(field, m, m), y: Matrix::zeros(field, k, k) }
    }

    /// `(Φ₁Φ₂, R₁R₂, Φ₁Y₂ + Y₁Φ₂ + Y₁Y₂)`.
    pub fn mul(&self, o: &Triple) -> Triple {
        let m = |a: &Matrix, b: &Matrix| a.mul(b).expect("shapes agree");
        let y = m(&self.phi, &o.y).add(&m(&self.y, &o.phi)).and_then(|s| s.add(&m(&self.y, &o.y)));
        Triple { phi: m(&self.phi, &o.phi), r: m(&self.r, &o.r), y: y.expect("shapes agree") }
    }

    pub fn add(&self, o: &Triple) -> Triple {
        Triple {
            phi: self.phi.add(&o.phi).expect("shapes agree"),
            r: self.r.add(&o.r).expect("shapes agree"),
            y: self.y.add(&o.y).expect("shapes agree"),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Triple {
        Triple { phi: self.phi.scale(c), r: self.r.scale(c), y: self.y.scale(c) }
    }

    /// Action on `A(+)`.
    pub fn action(&self) -> Matrix {
        self.phi.add(&self.y).expect("shapes agree")
    }

    /// Value of the circle closure: `tr(D R) + tr(Y)`.
    pub fn closure(&self, d: &Matrix) -> Scalar {
        let c = d.mul(&self.r).and_then(|x| x.trace()).expect("square");
        c + self.y.trace().expect("square")
    }
}

/// `A(+-) ≅ I × K` with basis: the `k²` matrix units of `I` (row-major),
/// followed by a basis of `K` made of projected arcs `p*(ω) = 1_K · arc(ω)`.
#[derive(Clone, Debug)]
pub struct PairAlgebra {
    field: Field,
    alphabet: Alphabet,
    state: StateSpace,
    circular: CircularRepresentation,
    arc_words: Vec<Word>,
    arc_pairs: Vec<(Matrix, Matrix)>,
    k_words: Vec<Word>,
    k_pairs: Vec<(Matrix, Matrix)>,
    k_gram_inv: Matrix,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    one_prime: Vec<Scalar>,
    one_k: Vec<Scalar>,
    trace: Vec<Scalar>,
    u_dim: usize,
    u_prime_dim: usize,
    dim_by_evaluation: usize,
    u_dim_by_evaluation: usize,
}

/// Idempotents `1_K` (when `K ≠ 0`) and `v^i ⊗ v_i`, with the checks run on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub idempotents: Vec<(String, Vec<Scalar>)>,
    pub all_idempotent: bool,
    pub orthogonal: bool,
    pub sums_to_unit: bool,
}

impl IdempotentReport {
    pub fn pass(&self) -> bool {
        self.all_idempotent && self.orthogonal && self.sums_to_unit
    }
}

pub fn build_pair_algebra(t: &Theory) -> Result<PairAlgebra> {
    build_pair_algebra_with(t, &Limits::default())
}

pub fn build_pair_algebra_with(t: &Theory, limits: &Limits) -> Result<PairAlgebra> {
    let field = t.field();
    let state = minimize(t.interval());
    let circular = t.circular().clone();
    let s = t.alphabet().len();
    let k = state.dim();
    let m = circular.dim();
    let d = circular.weight().clone();

    let order = match &limits.letter_order {
        Some(o) => {
            let mut sorted = o.clone();
            sorted.sort_unstable();
            if sorted != (0..s).collect::<Vec<_>>() {
                return Err(Error::InvalidInput("letter order must be a permutation of the alphabet".into()));
            }
            o.clone()
        }
        None => (0..s).collect(),
    };
    let bound = limits.max_word_len.unwrap_or(k * k + m * m + 1);

    // Saturate the span of (φ(ω), ρ(ω)).
    let pair_of = |w: &Word| -> Result<(Matrix, Matrix)> { Ok((state.word_action(w)?, circular.word_matrix(w)?)) };
    let flat = |p: &(Matrix, Matrix)| -> Vec<Scalar> { p.0.entries().iter().chain(p.1.entries()).cloned().collect() };
    let mut span = SpanBasis::new(field, k * k + m * m);
    let mut arc_words = Vec::new();
    let mut arc_pairs = Vec::new();
    let mut pending: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    pending.insert((0, Vec::new()));
    while let Some((len, key)) = pending.pop_first() {
        if span.is_full() {
            break;
        }
        let w = Word(key.iter().map(|&p| order[p]).collect());
        let pair = pair_of(&w)?;
        if span.insert(&flat(&pair)).is_some() {
            if len > bound {
                return Err(Error::SaturationLimit(bound));
            }
            for p in 0..s {
                let mut next = key.clone();
                next.push(p);
                pending.insert((len + 1, next));
            }
            arc_words.push(w);
            arc_pairs.push(pair);
        }
    }

    // Gram of the trace on K over projected arcs.
    let trd = |r1: &Matrix, r2: &Matrix| -> Scalar {
        d.mul(r1).and_then(|x| x.mul(r2)).and_then(|x| x.trace()).expect("square")
    };
    let trm = |a: &Matrix, b: &Matrix| -> Scalar { a.mul(b).and_then(|x| x.trace()).expect("square") };
    let n_arcs = arc_pairs.len();
    let gram: Vec<Vec<Scalar>> = (0..n_arcs)
        .map(|b| {
            (0..n_arcs).map(|c| trd(&arc_pairs[b].1, &arc_pairs[c].1) - trm(&arc_pairs[b].0, &arc_pairs[c].0)).collect()
        })
        .collect();
    let mut rows = SpanBasis::new(field, n_arcs);
    let mut chosen = Vec::new();
    for (b, row) in gram.iter().enumerate() {
        if rows.insert(row).is_some() {
            chosen.push(b);
        }
    }
    let gram_m = Matrix::from_rows(field, gram, n_arcs)?;
    let k_gram_inv = gram_m.select(&chosen, &chosen).inverse()?;
    let k_words: Vec<Word> = chosen.iter().map(|&b| arc_words[b].clone()).collect();
    let k_pairs: Vec<(Matrix, Matrix)> = chosen.iter().map(|&b| arc_pairs[b].clone()).collect();

    let mut pa = PairAlgebra {
        field,
        alphabet: t.alphabet().clone(),
        state,
        circular,
        arc_words,
        arc_pairs,
        k_words,
        k_pairs,
        k_gram_inv,
        mult: Vec::new(),
        unit: Vec::new(),
        one_prime: Vec::new(),
        one_k: Vec::new(),
        trace: Vec::new(),
        u_dim: 0,
        u_prime_dim: 0,
        dim_by_evaluation: 0,
        u_dim_by_evaluation: 0,
    };

    let basis = pa.basis_triples();
    let n = basis.len();
    pa.mult = basis.iter().map(|a| basis.iter().map(|b| pa.coordinates(&a.mul(b))).collect()).collect();
    pa.unit = pa.coordinates(&pa.arc_triple(&Word::empty())?);
    pa.one_prime =
        (0..n).map(|i| if i < k * k && i / k.max(1) == i % k.max(1) { field.one() } else { field.zero() }).collect();
    pa.one_k = pa.unit.iter().zip(&pa.one_prime).map(|(a, b)| a - b).collect();
    pa.trace = basis.iter().map(|x| x.closure(pa.circular.weight())).collect();

    let arc_coords: Vec<Vec<Scalar>> =
        pa.arc_words.clone().iter().map(|w| pa.arc_triple(w).map(|x| pa.coordinates(&x))).collect::<Result<_>>()?;
    pa.u_dim = rank_of(field, &arc_coords, n);
    let k_parts: Vec<Vec<Scalar>> = arc_coords.iter().map(|c| c[k * k..].to_vec()).collect();
    pa.u_prime_dim = pa.u_dim - rank_of(field, &k_parts, n - k * k);

    // Independent count: the rank of the closure evaluation on the spanning set.
    let mut spanning: Vec<Triple> = pa.arc_words.clone().iter().map(|w| pa.arc_triple(w)).collect::<Result<_>>()?;
    let arcs_ev: Vec<Vec<Scalar>> = spanning.iter().map(|x| pa.evaluation_vector(x)).collect();
    pa.u_dim_by_evaluation = rank_of(field, &arcs_ev, k * k + n_arcs);
    for i in 0..k {
        for j in 0..k {
            let mut x = Triple::zero(field, k, m);
            x.y = Matrix::unit(field, k, i, j);
            spanning.push(x);
        }
    }
    let all_ev: Vec<Vec<Scalar>> = spanning.iter().map(|x| pa.evaluation_vector(x)).collect();
    pa.dim_by_evaluation = rank_of(field, &all_ev, k * k + n_arcs);
    Ok(pa)
}

impl PairAlgebra {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_space(&self) -> &StateSpace {
        &self.state
    }

    /// `dim A(+)`.
    pub fn k(&self) -> usize {
        self.state.dim()
    }

    pub fn dim(&self) -> usize {
        self.k() * self.k() + self.k_words.len()
    }

    pub fn i_dim(&self) -> usize {
        self.k() * self.k()
    }

    pub fn k_dim(&self) -> usize {
        self.k_words.len()
    }

    /// Indices of the `I` basis inside the full basis.
    pub fn i_basis(&self) -> std::ops::Range<usize> {
        0..self.i_dim()
    }

    /// Indices of the `K` basis inside the full basis.
    pub fn k_basis(&self) -> std::ops::Range<usize> {
        self.i_dim()..self.dim()
    }

    /// Words `ω` whose projections `p*(ω)` form the `K` basis.
    pub fn k_words(&self) -> &[Word] {
        &self.k_words
    }

    /// Words whose arcs span the arc part of the pre-quotient model.
    pub fn arc_words(&self) -> &[Word] {
        &self.arc_words
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn one_prime(&self) -> &[Scalar] {
        &self.one_prime
    }

    pub fn one_k(&self) -> &[Scalar] {
        &self.one_k
    }

    /// Closure trace on the full basis.
    pub fn trace_covector(&self) -> &[Scalar] {
        &self.trace
    }

    pub fn u_dim(&self) -> usize {
        self.u_dim
    }

    pub fn u_prime_dim(&self) -> usize {
        self.u_prime_dim
    }

    /// `dim A(+-)` recomputed as the rank of the closure evaluation on the
    /// spanning set of arcs and matrix units, without using the `I × K` split.
    pub fn dim_by_evaluation(&self) -> usize {
        self.dim_by_evaluation
    }

    /// `dim U` recomputed from closure evaluations of arcs alone.
    pub fn u_dim_by_evaluation(&self) -> usize {
        self.u_dim_by_evaluation
    }

    /// `(dim A(+), dim U', dim K)`.
    pub fn invariant_triple(&self) -> (usize, usize, usize) {
        (self.k(), self.u_prime_dim, self.k_dim())
    }

    /// The arc decorated by `w`: `(φ(w), ρ(w), 0)`.
    pub fn arc_triple(&self, w: &Word) -> Result<Triple> {
        check_word(w, self.alphabet.len())?;
        Ok(Triple {
            phi: self.state.word_action(w)?,
            r: self.circular.word_matrix(w)?,
            y: Matrix::zeros(self.field, self.k(), self.k()),
        })
    }

    /// Representatives of the basis elements.
    pub fn basis_triples(&self) -> Vec<Triple> {
        let (f, k, m) = (self.field, self.k(), self.circular.dim());
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..k {
            for j in 0..k {
                let mut x = Triple::zero(f, k, m);
                x.y = Matrix::unit(f, k, i, j);
                out.push(x);
            }
        }
        for (phi, r) in &self.k_pairs {
            out.push(Triple { phi: phi.clone(), r: r.clone(), y: phi.neg() });
        }
        out
    }

    /// Coordinates of a pre-quotient element in the algebra basis.
    pub fn coordinates(&self, x: &Triple) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = x.action().entries().to_vec();
        out.extend(self.k_coordinates(x));
        out
    }

    /// Coordinates of `1_K · x` in the `K` basis.
    fn k_coordinates(&self, x: &Triple) -> Vec<Scalar> {
        let d = self.circular.weight();
        let h: Vec<Scalar> = self
            .k_pairs
            .iter()
            .map(|(phi, rho)| {
                let a = d.mul(rho).and_then(|p| p.mul(&x.r)).and_then(|p| p.trace()).expect("square");
                let b = phi.mul(&x.phi).and_then(|p| p.trace()).expect("square");
                a - b
            })
            .collect();
        self.k_gram_inv.apply(&h)
    }

    /// Interval closures (`Φ + Y`) and circle closures against every saturated arc.
    fn evaluation_vector(&self, x: &Triple) -> Vec<Scalar> {
        let d = self.circular.weight();
        let mut out: Vec<Scalar> = x.action().entries().to_vec();
        for (phi, rho) in &self.arc_pairs {
            let a = d.mul(rho).and_then(|p| p.mul(&x.r)).and_then(|p| p.trace()).expect("square");
            let b = phi.mul(&x.y).and_then(|p| p.trace()).expect("square");
            out.push(a + b);
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.mult[i][j]) {
                    if !c.is_zero() {
                        *o += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self, x: &[Scalar]) -> Scalar {
        dot(self.field, &self.trace, x)
    }

    /// Full coordinates of an element given in `K` coordinates.
    pub fn embed_k(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.i_dim()];
        out.extend_from_slice(x);
        out
    }

    /// `K` coordinates of `p*(w) = 1_K · arc(w)`.
    pub fn project_word(&self, w: &Word) -> Result<Vec<Scalar>> {
        Ok(self.k_coordinates(&self.arc_triple(w)?))
    }

    /// Trace of an element given in `K` coordinates.
    pub fn trace_k(&self, x: &[Scalar]) -> Scalar {
        dot(self.field, &self.trace[self.i_dim()..], x)
    }

    /// `K` with its closure trace as a Frobenius algebra; the zero algebra when `K = 0`.
    pub fn frobenius_of_k(&self) -> FrobeniusAlgebra {
        let (i0, n) = (self.i_dim(), self.dim());
        let kd = self.k_dim();
        let mut mult = vec![vec![Vec::new(); kd]; kd];
        for a in 0..kd {
            for b in 0..kd {
                let c = &self.mult[i0 + a][i0 + b];
                debug_assert!(c[..i0].iter().all(Scalar::is_zero), "K is an ideal complementary to I");
                mult[a][b] = c[i0..n].to_vec();
            }
        }
        let names = self.k_words.iter().map(|w| format!("p*({})", self.alphabet.format(w))).collect();
        FrobeniusAlgebra::new(self.field, names, mult, self.one_k[i0..].to_vec(), self.trace[i0..].to_vec())
            .expect("consistent shapes")
    }

    pub fn idempotent_report(&self) -> IdempotentReport {
        let f = self.field;
        let k = self.k();
        let mut list = Vec::new();
        if self.k_dim() > 0 {
            list.push(("1_K".to_string(), self.one_k.clone()));
        }
        for i in 0..k {
            let mut e = vec![f.zero(); self.dim()];
            e[i * k + i] = f.one();
            list.push((format!("v^{i}*v_{i}"), e));
        }
        let all_idempotent = list.iter().all(|(_, e)| &self.mul(e, e) == e);
        let zero = vec![f.zero(); self.dim()];
        let orthogonal = list
            .iter()
            .enumerate()
            .all(|(a, (_, x))| list.iter().enumerate().all(|(b, (_, y))| a == b || self.mul(x, y) == zero));
        let mut sum = zero.clone();
        for (_, e) in &list {
            sum = sum.iter().zip(e).map(|(a, b)| a + b).collect();
        }
        IdempotentReport { idempotents: list, all_idempotent, orthogonal, sums_to_unit: sum == self.unit }
    }

    /// Gram matrix of the trace form `tr(xy)` on the full basis.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let rows = (0..n).map(|i| (0..n).map(|j| self.trace(&self.mult[i][j])).collect()).collect();
        Matrix::from_rows(self.field, rows, n).expect("square")
    }
}

/// `(dim A(+), dim U', dim K)` of a theory.
pub fn invariant_triple(t: &Theory) -> Result<(usize, usize, usize)> {
    Ok(build_pair_algebra(t)?.invariant_triple())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{LinearRepresentation, RationalFunction1};
    use crate::universal::theory::constant_circular;

    const Q: Field = Field::Rational;

    fn point_theory(lambda: i64) -> Theory {
        let rep =
            LinearRepresentation::new(Matrix::from_i64(Q, &[&[1]]), vec![], Matrix::from_i64(Q, &[&[1]])).unwrap();
        Theory::new(Alphabet::standard(0), rep, constant_circular(Q.from_i64(lambda))).unwrap()
    }

    fn nilpotent_theory(mu: i64, lambda: i64) -> Theory {
        let zi = RationalFunction1::from_i64(Q, &[mu, 1], &[1]).unwrap();
        let zc = RationalFunction1::from_i64(Q, &[lambda], &[1]).unwrap();
        Theory::from_generating_functions(&zi, &zc).unwrap()
    }

    #[test]
    fn point_theory_has_one_dimensional_k() {
        let pa = build_pair_algebra(&point_theory(5)).unwrap();
        assert_eq!(pa.dim(), 2);
        assert_eq!(pa.invariant_triple(), (1, 0, 1));
        let w = pa.one_k().to_vec();
        assert_eq!(pa.mul(&w, &w), w);
        assert_eq!(pa.trace(&w), Q.from_i64(4));
        assert_eq!(pa.dim_by_evaluation(), 2);
        assert!(pa.idempotent_report().pass());
        assert_eq!(pa.idempotent_report().idempotents.len(), 2);
    }

    #[test]
    fn nilpotent_example_dimensions() {
        let pa = build_pair_algebra(&nilpotent_theory(3, 5)).unwrap();
        assert_eq!(pa.dim(), 5);
        assert_eq!(pa.dim_by_evaluation(), 5);
        assert_eq!(pa.invariant_triple(), (2, 1, 1));
        assert_eq!(pa.trace_k(&pa.project_word(&Word::empty()).unwrap()), Q.from_i64(3));
        assert_eq!(pa.idempotent_report().idempotents.len(), 3);
        let pa2 = build_pair_algebra(&nilpotent_theory(3, 2)).unwrap();
        assert_eq!(pa2.k_dim(), 0);
        assert_eq!(pa2.dim(), 4);
    }

    #[test]
    fn trace_mode_has_no_k() {
        let zi = RationalFunction1::from_i64(Q, &[1, 1], &[1, -1, -1]).unwrap();
        let rep = crate::series::rational_to_rep(&zi).unwrap();
        let t = Theory::trace_of_interval(Alphabet::standard(1), rep).unwrap();
        let pa = build_pair_algebra(&t).unwrap();
        assert_eq!(pa.k_dim(), 0);
        assert_eq!(pa.dim(), 4);
        assert!(pa.frobenius_of_k().is_zero());
        assert!(pa.project_word(&Word::power(0, 3)).unwrap().is_empty());
    }

    #[test]
    fn saturation_limit_is_enforced() {
        let limits = Limits { max_word_len: Some(0), letter_order: None };
        let r = build_pair_algebra_with(&nilpotent_theory(3, 5), &limits);
        assert_eq!(r.err(), Some(Error::SaturationLimit(0)));
    }
}
