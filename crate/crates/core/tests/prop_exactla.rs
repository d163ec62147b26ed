use defekt_core::exactla::poly_gcd_lcm;
use defekt_core::{Field, Matrix, Polynomial, Scalar};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(5).unwrap()), Just(Field::prime(7).unwrap())]
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let data = v.chunks(cols).map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        Matrix::from_rows(f, data, cols).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

fn square(n: std::ops::Range<usize>) -> impl Strategy<Value = Matrix> {
    (field(), n).prop_flat_map(|(f, n)| matrix(f, n, n))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-4i64..=4, 1..5).prop_map(|c| Polynomial::from_i64(Field::Rational, &c))
}

fn eval_at_matrix(p: &Polynomial, a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut acc = Matrix::zeros(a.field(), n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a).unwrap().add(&Matrix::identity(a.field(), n).scale(c)).unwrap();
    }
    acc
}

proptest! {
    #[test]
    fn rank_of_transpose(a in any_matrix()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn kernel_has_complementary_dimension(a in any_matrix()) {
        let ker = a.kernel_basis();
        prop_assert_eq!(ker.len() + a.rank(), a.cols());
        for v in &ker {
            prop_assert!(a.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_when_full_rank(a in square(1..5)) {
        let n = a.rows();
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(a.field(), n)),
            Err(_) => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn cayley_hamilton(a in square(1..5)) {
        let p = a.char_poly().unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(a.rows()));
        prop_assert!(eval_at_matrix(&p, &a).is_zero());
    }

    #[test]
    fn char_poly_of_block_triangular(
        (a, b, c) in (field(), 1usize..4, 1usize..4).prop_flat_map(|(f, n, m)| (matrix(f, n, n), matrix(f, m, m), matrix(f, n, m)))
    ) {
        let (n, m) = (a.rows(), b.rows());
        let f = a.field();
        let mut big = Matrix::zeros(f, n + m, n + m);
        for i in 0..n {
            for j in 0..n { big.set(i, j, a.get(i, j).clone()); }
            for j in 0..m { big.set(i, n + j, c.get(i, j).clone()); }
        }
        for i in 0..m {
            for j in 0..m { big.set(n + i, n + j, b.get(i, j).clone()); }
        }
        prop_assert_eq!(big.char_poly().unwrap(), a.char_poly().unwrap().mul(&b.char_poly().unwrap()));
    }

    #[test]
    fn gcd_and_lcm(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (g, l) = poly_gcd_lcm(&a, &b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert_eq!(g.mul(&l), a.mul(&b).monic());
    }
}
