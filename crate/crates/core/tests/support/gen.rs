//! Seeded generators shared by the integration tests.

use defekt_core::frobenius::FrobeniusAlgebra;
use defekt_core::series::{Alphabet, CircularRepresentation, LinearRepresentation, RationalFunction1};
use defekt_core::universal::Theory;
use defekt_core::{Field, Matrix, Polynomial, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, f: Field, bound: i64) -> Scalar {
    f.from_i64(rng.gen_range(-bound..=bound))
}

pub fn nonzero(rng: &mut ChaCha8Rng, f: Field, bound: i64) -> Scalar {
    loop {
        let x = small(rng, f, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn vector(rng: &mut ChaCha8Rng, f: Field, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| small(rng, f, bound)).collect()
}

pub fn matrix(rng: &mut ChaCha8Rng, f: Field, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows).map(|_| vector(rng, f, cols, bound)).collect();
    Matrix::from_rows(f, data, cols).unwrap()
}

pub fn invertible(rng: &mut ChaCha8Rng, f: Field, n: usize, bound: i64) -> Matrix {
    loop {
        let m = matrix(rng, f, n, n, bound);
        if m.rank() == n {
            return m;
        }
    }
}

/// Integer matrix of determinant 1: a run of random shears `row_i += ±row_j`.
/// Keeps integral structure constants integral under a change of basis.
pub fn unimodular(rng: &mut ChaCha8Rng, f: Field, n: usize) -> Matrix {
    let mut m = Matrix::identity(f, n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = if rng.gen_bool(0.5) { f.one() } else { -f.one() };
        for col in 0..n {
            let v = m.get(i, col) + &(&c * m.get(j, col));
            m.set(i, col, v);
        }
    }
    m
}

/// `P(T)/Q(T)` with `deg P, deg Q ≤ max_deg` and `Q(0) = 1`, reduced.
pub fn rational1(rng: &mut ChaCha8Rng, f: Field, max_deg: usize) -> RationalFunction1 {
    let dn = rng.gen_range(0..=max_deg);
    let dd = rng.gen_range(0..=max_deg);
    let num = Polynomial::new(f, vector(rng, f, dn + 1, 4));
    let mut den = vector(rng, f, dd + 1, 4);
    den[0] = f.one();
    RationalFunction1::new(num, Polynomial::new(f, den)).unwrap()
}

/// A monic polynomial of the given degree.
pub fn monic(rng: &mut ChaCha8Rng, f: Field, deg: usize, bound: i64) -> Polynomial {
    let mut c = vector(rng, f, deg, bound);
    c.push(f.one());
    Polynomial::new(f, c)
}

fn base_algebra(rng: &mut ChaCha8Rng, f: Field, max_dim: usize) -> FrobeniusAlgebra {
    loop {
        let a = match rng.gen_range(0..4) {
            0 => FrobeniusAlgebra::ground(nonzero(rng, f, 5)),
            1 => FrobeniusAlgebra::cyclic_group(f, rng.gen_range(1..=max_dim)),
            2 if max_dim >= 4 => FrobeniusAlgebra::matrix_algebra(f, 2, nonzero(rng, f, 5)),
            _ => {
                let d = rng.gen_range(1..=max_dim);
                let g = monic(rng, f, d, 3);
                match FrobeniusAlgebra::polynomial_quotient(&g, vector(rng, f, d, 4)) {
                    Ok(a) => a,
                    Err(_) => continue,
                }
            }
        };
        if a.dim() <= max_dim && a.verify().all_pass() {
            return a;
        }
    }
}

/// A symmetric Frobenius algebra of dimension at most `max_dim`: a product of
/// group, matrix, truncated-polynomial and ground algebras in a random basis.
pub fn frobenius(rng: &mut ChaCha8Rng, f: Field, max_dim: usize) -> FrobeniusAlgebra {
    loop {
        let mut a = base_algebra(rng, f, max_dim);
        if a.dim() < max_dim && rng.gen_bool(0.4) {
            a = a.product(&base_algebra(rng, f, max_dim - a.dim()));
        }
        let p = unimodular(rng, f, a.dim());
        let b = a.change_basis(&p).unwrap();
        if b.verify().all_pass() {
            return b;
        }
    }
}

pub fn element(rng: &mut ChaCha8Rng, b: &FrobeniusAlgebra, bound: i64) -> Vec<Scalar> {
    vector(rng, b.field(), b.dim(), bound)
}

/// A two-letter theory whose circular part has pairwise commuting letters or
/// a scalar weight.
pub fn theory(rng: &mut ChaCha8Rng, f: Field) -> Theory {
    let n = rng.gen_range(1..=3);
    let interval = LinearRepresentation::new(
        matrix(rng, f, 1, n, 2),
        (0..2).map(|_| matrix(rng, f, n, n, 2)).collect(),
        matrix(rng, f, n, 1, 2),
    )
    .unwrap();
    let m = rng.gen_range(1..=2);
    let circular = if rng.gen_bool(0.5) {
        let diag = |rng: &mut ChaCha8Rng| {
            let mut d = Matrix::zeros(f, m, m);
            for i in 0..m {
                d.set(i, i, small(rng, f, 3));
            }
            d
        };
        let letters = vec![diag(rng), diag(rng)];
        CircularRepresentation::new(letters, matrix(rng, f, m, m, 3)).unwrap()
    } else {
        let letters = (0..2).map(|_| matrix(rng, f, m, m, 2)).collect();
        CircularRepresentation::new(letters, Matrix::identity(f, m).scale(&small(rng, f, 3))).unwrap()
    };
    Theory::new(Alphabet::standard(2), interval, circular).unwrap()
}
