//! Open-closed theories: knowledgeable Frobenius pairs, and surfaces whose
//! side boundary is evaluated by a symmetric Frobenius algebra while closed
//! components are evaluated by a rational series.

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::frobenius::{
    eval_surface, handle_element, hole_element, window_matrix, AxiomCheck, FrobeniusAlgebra, SurfaceComponent,
    SurfaceSpec, Witness,
};
use crate::series::RationalFunction1;

/// An open algebra `B`, a commutative closed algebra `C`, the zipper
/// `ĵ: B → C` and the cozipper `ĵ*: C → B`, as matrices acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnowledgeablePair {
    pub open_algebra: FrobeniusAlgebra,
    pub closed_algebra: FrobeniusAlgebra,
    pub zipper: Matrix,
    pub cozipper: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnowledgeableReport {
    pub checks: Vec<(&'static str, AxiomCheck)>,
}

impl KnowledgeableReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, c)| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }
}

fn check(pass: bool, w: impl FnOnce() -> Witness) -> AxiomCheck {
    if pass {
        AxiomCheck::ok()
    } else {
        AxiomCheck::fail(w())
    }
}

/// `Δ(a) = Σ_i a x_i ⊗ y_i` as a coefficient matrix.
fn coproduct(alg: &FrobeniusAlgebra, y: &[Vec<Scalar>], a: &[Scalar]) -> Matrix {
    let f = alg.field();
    let n = alg.dim();
    let mut t = Matrix::zeros(f, n, n);
    for (i, yi) in y.iter().enumerate() {
        let ax = alg.mul(a, &alg.basis_vector(i));
        for p in 0..n {
            if ax[p].is_zero() {
                continue;
            }
            for q in 0..n {
                let v = t.get(p, q) + &(&ax[p] * &yi[q]);
                t.set(p, q, v);
            }
        }
    }
    t
}

/// Checks, in order: both algebras verify, `C` is commutative, the maps
/// have the right shapes, then
/// (1) `ĵ*` is a unital algebra homomorphism,
/// (2) `ĵ*(C)` is central in `B`,
/// (3) `ĵ` is a counital coalgebra homomorphism,
/// (4) `tr_C(ĵ(a)·c) = tr_B(a·ĵ*(c))`,
/// (5) `ĵ*∘ĵ` is the window map of `B`.
/// Later checks are skipped (reported as failing) when the shapes are wrong.
pub fn check_knowledgeable(p: &KnowledgeablePair) -> KnowledgeableReport {
    let (b, c) = (&p.open_algebra, &p.closed_algebra);
    let (nb, nc) = (b.dim(), c.dim());
    let mut checks = vec![
        ("open algebra verifies", check(b.verify().all_pass(), || Witness::Index(0))),
        ("closed algebra verifies", check(c.verify().all_pass(), || Witness::Index(1))),
        ("same field", check(b.field() == c.field(), || Witness::Index(0))),
        ("closed algebra commutative", check(c.is_commutative(), || Witness::Index(0))),
    ];
    let shapes = p.zipper.rows() == nc
        && p.zipper.cols() == nb
        && p.cozipper.rows() == nb
        && p.cozipper.cols() == nc
        && p.zipper.field() == b.field()
        && p.cozipper.field() == b.field()
        && b.field() == c.field();
    checks.push(("map shapes", check(shapes, || Witness::Pair(p.zipper.rows(), p.zipper.cols()))));
    let names = [
        "cozipper algebra homomorphism",
        "cozipper image central",
        "zipper coalgebra homomorphism",
        "duality",
        "cardy",
    ];
    let (yb, yc) = match (b.dual_basis(), c.dual_basis()) {
        (Ok(yb), Ok(yc)) if shapes => (yb, yc),
        _ => {
            for n in names {
                checks.push((n, AxiomCheck::fail(Witness::Index(0))));
            }
            return KnowledgeableReport { checks };
        }
    };
    let zip = |a: &[Scalar]| p.zipper.apply(a);
    let cozip = |x: &[Scalar]| p.cozipper.apply(x);

    let mut hom = check(cozip(c.unit()) == b.unit(), || Witness::Element(c.unit().to_vec()));
    'outer: for i in 0..nc {
        for j in 0..nc {
            if !hom.pass {
                break 'outer;
            }
            let (ci, cj) = (c.basis_vector(i), c.basis_vector(j));
            hom = check(cozip(&c.mul(&ci, &cj)) == b.mul(&cozip(&ci), &cozip(&cj)), || Witness::Pair(i, j));
        }
    }
    checks.push((names[0], hom));

    let central = (0..nc).find(|&i| !b.is_central(&cozip(&c.basis_vector(i))));
    checks.push((names[1], check(central.is_none(), || Witness::Index(central.unwrap_or(0)))));

    let jt = p.zipper.transpose();
    let coalg = (0..nb).find(|&i| {
        let a = b.basis_vector(i);
        let lhs = p.zipper.mul(&coproduct(b, &yb, &a)).expect("shapes checked").mul(&jt).expect("shapes checked");
        lhs != coproduct(c, &yc, &zip(&a)) || c.tr(&zip(&a)) != b.tr(&a)
    });
    checks.push((names[2], check(coalg.is_none(), || Witness::Index(coalg.unwrap_or(0)))));

    let mut dual = AxiomCheck::ok();
    'dual: for i in 0..nb {
        for j in 0..nc {
            let (a, x) = (b.basis_vector(i), c.basis_vector(j));
            if c.tr(&c.mul(&zip(&a), &x)) != b.tr(&b.mul(&a, &cozip(&x))) {
                dual = AxiomCheck::fail(Witness::Pair(i, j));
                break 'dual;
            }
        }
    }
    checks.push((names[3], dual));

    let composite = p.cozipper.mul(&p.zipper).expect("shapes checked");
    let cardy = match window_matrix(b) {
        Ok(w) => {
            let bad = (0..nb).find(|&i| composite.column(i) != w.column(i));
            check(bad.is_none(), || Witness::Index(bad.unwrap_or(0)))
        }
        Err(_) => AxiomCheck::fail(Witness::Index(0)),
    };
    checks.push((names[4], cardy));
    KnowledgeableReport { checks }
}

/// One comparison of a connected surface of genus `genus` with `sides`
/// undecorated side circles, evaluated through `C` and through `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZipperCase {
    pub genus: usize,
    pub sides: usize,
    /// `tr_C(h_C^g · ĵ(1_B)^s)` with `h_C` the handle element of `C`.
    pub via_closed: Scalar,
    pub via_open: Scalar,
}

/// Evaluate small surfaces both ways for `g ≤ gmax`, `1 ≤ s ≤ smax`.
pub fn zipper_compatibility(p: &KnowledgeablePair, gmax: usize, smax: usize) -> Result<Vec<ZipperCase>> {
    let (b, c) = (&p.open_algebra, &p.closed_algebra);
    let h = hole_element(c)?;
    let side = p.zipper.apply(b.unit());
    let mut out = Vec::new();
    for g in 0..=gmax {
        for s in 1..=smax {
            let via_closed = c.tr(&c.mul(&c.pow(&h, g), &c.pow(&side, s)));
            let comp = SurfaceComponent { genus: g, boundaries: vec![Vec::new(); s] };
            let via_open = eval_surface(b, &SurfaceSpec { components: vec![comp] })?;
            out.push(ZipperCase { genus: g, sides: s, via_closed, via_open });
        }
    }
    Ok(out)
}

/// A symmetric Frobenius algebra for side boundary and the series
/// `Z_0 = Σ α_{0,g} T^g` of closed connected genus-`g` surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenClosedTheory {
    open_algebra: FrobeniusAlgebra,
    closed_series: RationalFunction1,
}

impl OpenClosedTheory {
    pub fn new(open_algebra: FrobeniusAlgebra, closed_series: RationalFunction1) -> Result<OpenClosedTheory> {
        if closed_series.field() != open_algebra.field() {
            return Err(Error::FieldMismatch { expected: open_algebra.field(), found: closed_series.field() });
        }
        Ok(OpenClosedTheory { open_algebra, closed_series })
    }

    pub fn open_algebra(&self) -> &FrobeniusAlgebra {
        &self.open_algebra
    }

    pub fn closed_series(&self) -> &RationalFunction1 {
        &self.closed_series
    }

    /// `α_{0,g}`.
    pub fn closed_value(&self, genus: usize) -> Scalar {
        self.closed_series.taylor(genus + 1).pop().expect("nonempty expansion")
    }
}

/// Product over components: `α_{0,g}` for closed ones, the thin-surface value otherwise.
pub fn eval_oc_closed(t: &OpenClosedTheory, s: &SurfaceSpec) -> Result<Scalar> {
    let f = t.open_algebra.field();
    let mut value = f.one();
    for c in &s.components {
        let v = if c.is_closed() {
            t.closed_value(c.genus)
        } else {
            eval_surface(&t.open_algebra, &SurfaceSpec { components: vec![c.clone()] })?
        };
        value *= &v;
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleStateSpace {
    pub dim: usize,
    /// `(genus, side circles)` of each spanning vector, in Gram order.
    pub index: Vec<(usize, usize)>,
    pub gram: Matrix,
    /// Rank at `(gmax - 1, smax - 1)` equals rank at `(gmax, smax)`.
    pub stabilized: bool,
}

/// Rank of the Gram matrix of connected surfaces with one outgoing circle.
/// Gluing `(g, s)` to `(h, u)` gives genus `g + h` with `s + u` side circles,
/// worth `tr(H^{g+h} E^{s+u-1})` when `s + u ≥ 1` and `α_{0,g+h}` otherwise.
pub fn state_space_circle(t: &OpenClosedTheory, gmax: usize, smax: usize) -> Result<CircleStateSpace> {
    if gmax == 0 || smax == 0 {
        return Err(Error::InvalidInput("genus and side bounds must be at least 1".into()));
    }
    let b = &t.open_algebra;
    let (h, e) = (handle_element(b)?, hole_element(b)?);
    let hp: Vec<Vec<Scalar>> = (0..=2 * gmax).map(|g| b.pow(&h, g)).collect();
    let ep: Vec<Vec<Scalar>> = (0..2 * smax).map(|s| b.pow(&e, s)).collect();
    let alpha = t.closed_series.taylor(2 * gmax + 1);
    let index: Vec<(usize, usize)> = (0..=gmax).flat_map(|g| (0..=smax).map(move |s| (g, s))).collect();
    let entry = |(g, s): (usize, usize), (k, u): (usize, usize)| {
        if s + u == 0 {
            alpha[g + k].clone()
        } else {
            b.tr(&b.mul(&hp[g + k], &ep[s + u - 1]))
        }
    };
    let rows: Vec<Vec<Scalar>> = index.iter().map(|&x| index.iter().map(|&y| entry(x, y)).collect()).collect();
    let gram = Matrix::from_rows(b.field(), rows, index.len())?;
    let dim = gram.rank();
    let inner: Vec<usize> = (0..index.len()).filter(|&i| index[i].0 < gmax && index[i].1 < smax).collect();
    let stabilized = gram.select(&inner, &inner).rank() == dim;
    Ok(CircleStateSpace { dim, index, gram, stabilized })
}

/// `dim A(k, m) = (dim B)^k · dim A(0, m)` for `m ≤ 1`.
pub fn state_space_mixed_dim(t: &OpenClosedTheory, k: usize, m: usize, gmax: usize, smax: usize) -> Result<usize> {
    let closed = match m {
        0 => 1,
        1 => state_space_circle(t, gmax, smax)?.dim,
        _ => return Err(Error::Unsupported(format!("A(k, m) with m = {m} closed circles"))),
    };
    Ok(t.open_algebra.dim().pow(k as u32) * closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Field, Polynomial};

    const Q: Field = Field::Rational;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    /// `B = F_p[C_p]`, `C = F_p[x]/(x²)` with `tr(1) = λ`, `tr(x) = 1`.
    fn cyclic_pair(lambda: i64) -> KnowledgeablePair {
        let f = f5();
        let b = FrobeniusAlgebra::cyclic_group(f, 5);
        let c = FrobeniusAlgebra::polynomial_quotient(
            &Polynomial::from_i64(f, &[0, 0, 1]),
            vec![f.from_i64(lambda), f.one()],
        )
        .unwrap();
        let mut zipper = Matrix::zeros(f, 2, 5);
        zipper.set(1, 0, f.one());
        let mut cozipper = Matrix::zeros(f, 5, 2);
        cozipper.set(0, 0, f.one());
        KnowledgeablePair { open_algebra: b, closed_algebra: c, zipper, cozipper }
    }

    fn matrix_pair() -> KnowledgeablePair {
        let b = FrobeniusAlgebra::matrix_algebra(Q, 2, Q.one());
        let c = FrobeniusAlgebra::ground(Q.one());
        let zipper = Matrix::from_i64(Q, &[&[1, 0, 0, 1]]);
        let cozipper = Matrix::from_i64(Q, &[&[1], &[0], &[0], &[1]]);
        KnowledgeablePair { open_algebra: b, closed_algebra: c, zipper, cozipper }
    }

    #[test]
    fn knowledgeable_examples() {
        for p in [cyclic_pair(7), matrix_pair()] {
            let r = check_knowledgeable(&p);
            assert!(r.all_pass(), "{:?}", r.checks);
        }
        let g = FrobeniusAlgebra::ground(Q.one());
        let id = Matrix::identity(Q, 1);
        let trivial =
            KnowledgeablePair { open_algebra: g.clone(), closed_algebra: g, zipper: id.clone(), cozipper: id };
        assert!(check_knowledgeable(&trivial).all_pass());
    }

    #[test]
    fn broken_cardy_is_reported() {
        let mut p = matrix_pair();
        p.cozipper = Matrix::from_i64(Q, &[&[2], &[0], &[0], &[2]]);
        let r = check_knowledgeable(&p);
        assert!(!r.get("cardy").unwrap().pass);
        assert!(!r.get("cozipper algebra homomorphism").unwrap().pass);
        assert!(r.get("cozipper image central").unwrap().pass);
    }

    #[test]
    fn zipper_compatibility_examples() {
        for p in [cyclic_pair(7), matrix_pair()] {
            for case in zipper_compatibility(&p, 2, 2).unwrap() {
                assert_eq!(case.via_closed, case.via_open, "{case:?}");
            }
        }
    }

    #[test]
    fn closed_values() {
        let f = f5();
        let b = FrobeniusAlgebra::cyclic_group(f, 5);
        let z0 = RationalFunction1::from_i64(f, &[7, 2], &[1]).unwrap();
        let t = OpenClosedTheory::new(b.clone(), z0).unwrap();
        let closed = |g| SurfaceComponent { genus: g, boundaries: vec![] };
        let one = |c: SurfaceComponent| SurfaceSpec { components: vec![c] };
        assert!(eval_oc_closed(&t, &one(closed(2))).unwrap().is_zero());
        assert_eq!(eval_oc_closed(&t, &one(closed(0))).unwrap(), f.from_i64(7));
        let a = b.basis_vector(0);
        let s = SurfaceSpec { components: vec![closed(1), SurfaceComponent::disk(vec![a.clone()])] };
        assert_eq!(eval_oc_closed(&t, &s).unwrap(), f.from_i64(2) * b.tr(&a));
    }

    #[test]
    fn circle_state_spaces() {
        let geometric = RationalFunction1::from_i64(Q, &[1], &[1, -1]).unwrap();
        let t = OpenClosedTheory::new(FrobeniusAlgebra::ground(Q.one()), geometric).unwrap();
        let r = state_space_circle(&t, 3, 3).unwrap();
        assert_eq!(r.dim, 1);
        assert!(r.stabilized);
        assert_eq!(state_space_mixed_dim(&t, 1, 1, 3, 3).unwrap(), 1);

        let t0 = OpenClosedTheory::new(FrobeniusAlgebra::zero(Q), RationalFunction1::zero(Q)).unwrap();
        assert_eq!(state_space_circle(&t0, 2, 2).unwrap().dim, 0);
        assert_eq!(state_space_mixed_dim(&t0, 0, 0, 1, 1).unwrap(), 1);
    }

    #[test]
    fn cyclic_group_circle_space() {
        // E = H = 0, so only (0,0), (1,0) and (0,1) survive:
        // Gram [[λ, 2, 1], [2, 0, 0], [1, 0, 0]] has rank 2.
        let f = f5();
        let t = OpenClosedTheory::new(
            FrobeniusAlgebra::cyclic_group(f, 5),
            RationalFunction1::from_i64(f, &[7, 2], &[1]).unwrap(),
        )
        .unwrap();
        let r = state_space_circle(&t, 3, 3).unwrap();
        let brute = Matrix::from_i64(f, &[&[7, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        assert_eq!(r.dim, brute.rank());
        assert_eq!(r.dim, 2);
        assert!(r.stabilized);
        assert_eq!(state_space_mixed_dim(&t, 2, 0, 1, 1).unwrap(), 25);
        assert!(matches!(state_space_mixed_dim(&t, 0, 2, 1, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn gram_entries_match_glued_surfaces() {
        let t = OpenClosedTheory::new(
            FrobeniusAlgebra::matrix_algebra(Q, 2, Q.from_i64(3)),
            RationalFunction1::from_i64(Q, &[1, 1], &[1, -2]).unwrap(),
        )
        .unwrap();
        let r = state_space_circle(&t, 2, 2).unwrap();
        let n = r.index.len();
        for x in 0..n {
            for y in 0..n {
                let ((g, s), (h, u)) = (r.index[x], r.index[y]);
                let glued = SurfaceComponent { genus: g + h, boundaries: vec![Vec::new(); s + u] };
                let v = eval_oc_closed(&t, &SurfaceSpec { components: vec![glued] }).unwrap();
                assert_eq!(r.gram.get(x, y), &v);
            }
        }
    }
}
