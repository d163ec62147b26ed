//! One-variable rational functions `P(T)/Q(T)` with `Q(0) = 1`.

use std::fmt;

use super::rep::LinearRepresentation;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Polynomial, Scalar};

/// A reduced fraction `P/Q` with `gcd(P, Q) = 1` and `Q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction1 {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction1 {
    /// Reduce `num/den`. Fails with `PoleAtZero` when the reduced denominator vanishes at 0.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction1> {
        let field = den.field();
        if num.field() != field {
            return Err(Error::FieldMismatch { expected: field, found: num.field() });
        }
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let mut p = num.exact_div(&g).expect("gcd divides numerator");
        let mut q = den.exact_div(&g).expect("gcd divides denominator");
        let q0 = q.coeff(0);
        if q0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let inv = q0.inv().expect("nonzero");
        p = p.scale(&inv);
        q = q.scale(&inv);
        Ok(RationalFunction1 { num: p, den: q })
    }

    pub fn polynomial(p: Polynomial) -> RationalFunction1 {
        let f = p.field();
        RationalFunction1 { num: p, den: Polynomial::one(f) }
    }

    pub fn constant(c: Scalar) -> RationalFunction1 {
        RationalFunction1::polynomial(Polynomial::constant(c))
    }

    pub fn zero(field: Field) -> RationalFunction1 {
        RationalFunction1::polynomial(Polynomial::zero(field))
    }

    /// Convenience constructor from small integer coefficient lists.
    pub fn from_i64(field: Field, num: &[i64], den: &[i64]) -> Result<RationalFunction1> {
        RationalFunction1::new(Polynomial::from_i64(field, num), Polynomial::from_i64(field, den))
    }

    pub fn field(&self) -> Field {
        self.den.field()
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The first `n` Taylor coefficients at `T = 0`.
    pub fn taylor(&self, n: usize) -> Vec<Scalar> {
        let mut s: Vec<Scalar> = Vec::with_capacity(n);
        for j in 0..n {
            let mut x = self.num.coeff(j);
            for i in 1..=j.min(self.den.coeffs().len().saturating_sub(1)) {
                x -= &(&self.den.coeff(i) * &s[j - i]);
            }
            s.push(x);
        }
        s
    }

    pub fn add(&self, other: &RationalFunction1) -> RationalFunction1 {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RationalFunction1::new(num, self.den.mul(&other.den)).expect("Q(0)=1 is preserved")
    }

    pub fn sub(&self, other: &RationalFunction1) -> RationalFunction1 {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        RationalFunction1::new(num, self.den.mul(&other.den)).expect("Q(0)=1 is preserved")
    }

    pub fn mul(&self, other: &RationalFunction1) -> RationalFunction1 {
        RationalFunction1::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("Q(0)=1 is preserved")
    }

    pub fn scale(&self, c: &Scalar) -> RationalFunction1 {
        RationalFunction1::new(self.num.scale(c), self.den.clone()).expect("Q(0)=1 is preserved")
    }
}

impl fmt::Display for RationalFunction1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// A one-letter representation whose values on `a^n` are the Taylor
/// coefficients of `z`, of dimension `max(deg P + 1, deg Q)`.
pub fn rational_to_rep(z: &RationalFunction1) -> Result<LinearRepresentation> {
    let field = z.field();
    if z.den.coeff(0).is_zero() {
        return Err(Error::PoleAtZero);
    }
    let dq = z.den.degree_i();
    let d = (z.num.degree_i() + 1).max(dq) as usize;
    // The state is the window (s_j, ..., s_{j+d-1}); the letter shifts it.
    let s = z.taylor(d);
    let mut m = Matrix::zeros(field, d, d);
    for i in 0..d.saturating_sub(1) {
        m.set(i, i + 1, field.one());
    }
    for i in 1..=dq.max(0) as usize {
        m.set(d - 1, d - i, -z.den.coeff(i));
    }
    let mut init = Matrix::zeros(field, 1, d);
    if d > 0 {
        init.set(0, 0, field.one());
    }
    LinearRepresentation::new(init, vec![m], Matrix::column_vector(field, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Word;

    const Q: Field = Field::Rational;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn reduces_and_normalizes() {
        // (2 - 2T) / (2 - 4T + 2T^2) = 1 / (1 - T)
        let z = RationalFunction1::from_i64(Q, &[2, -2], &[2, -4, 2]).unwrap();
        assert_eq!(z.num(), &Polynomial::from_i64(Q, &[1]));
        assert_eq!(z.den(), &Polynomial::from_i64(Q, &[1, -1]));
        assert_eq!(RationalFunction1::from_i64(Q, &[1], &[0, 1]), Err(Error::PoleAtZero));
        // T/T reduces to 1 and is accepted.
        assert!(RationalFunction1::from_i64(Q, &[0, 1], &[0, 1]).is_ok());
    }

    #[test]
    fn geometric_rep() {
        let z = RationalFunction1::from_i64(Q, &[1], &[1, -2]).unwrap();
        let rep = rational_to_rep(&z).unwrap();
        assert_eq!(rep.dim(), 1);
        for n in 0..8 {
            assert_eq!(rep.eval(&Word::power(0, n)).unwrap(), Q.from_i64(1 << n));
        }
    }

    #[test]
    fn zero_rep_has_dim_zero() {
        let rep = rational_to_rep(&RationalFunction1::zero(Q)).unwrap();
        assert_eq!(rep.dim(), 0);
        assert!(rep.eval(&Word::power(0, 3)).unwrap().is_zero());
    }

    #[test]
    fn fibonacci_like_rep() {
        let z = RationalFunction1::from_i64(Q, &[1, 1], &[1, -1, -1]).unwrap();
        assert_eq!(z.taylor(6), ints(&[1, 2, 3, 5, 8, 13]));
        let rep = rational_to_rep(&z).unwrap();
        assert_eq!(rep.dim(), 2);
        // Oracle: multiply out (1 - T - T^2) * sum s_n T^n = 1 + T by hand.
        let mut s = vec![1i64, 2];
        while s.len() < 12 {
            let n = s.len();
            s.push(s[n - 1] + s[n - 2]);
        }
        for (n, v) in s.iter().enumerate() {
            assert_eq!(rep.eval(&Word::power(0, n)).unwrap(), Q.from_i64(*v));
        }
    }

    #[test]
    fn improper_fraction_rep() {
        // (3 + T + T^3) / (1 - T): dim = max(4, 1) = 4.
        let z = RationalFunction1::from_i64(Q, &[3, 1, 0, 1], &[1, -1]).unwrap();
        let rep = rational_to_rep(&z).unwrap();
        assert_eq!(rep.dim(), 4);
        let t = z.taylor(10);
        assert_eq!(t, ints(&[3, 4, 4, 5, 5, 5, 5, 5, 5, 5]));
        for (n, v) in t.iter().enumerate() {
            assert_eq!(&rep.eval(&Word::power(0, n)).unwrap(), v);
        }
    }

    #[test]
    fn arithmetic() {
        let a = RationalFunction1::from_i64(Q, &[1], &[1, -1]).unwrap();
        let b = RationalFunction1::from_i64(Q, &[1], &[1, 1]).unwrap();
        let s = a.add(&b);
        assert_eq!(s, RationalFunction1::from_i64(Q, &[2], &[1, 0, -1]).unwrap());
        assert!(a.sub(&a).is_zero());
    }
}
