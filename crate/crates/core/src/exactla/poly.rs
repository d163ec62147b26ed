//! Univariate polynomials with coefficients in a [`Field`].

use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Ascending coefficient list without trailing zeros; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Polynomial {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Polynomial {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Polynomial {
        Polynomial::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Polynomial {
        Polynomial::new(c.field(), vec![c])
    }

    /// The monomial `c * T^n`.
    pub fn monomial(c: Scalar, n: usize) -> Polynomial {
        let f = c.field();
        let mut v = vec![f.zero(); n];
        v.push(c);
        Polynomial::new(f, v)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `T^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn degree_i(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    /// Divide by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(self.field, out)
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dl = d.leading().expect("division by the zero polynomial");
        let inv = dl.inv().expect("nonzero leading coefficient");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Polynomial::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &(&c * dj);
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Polynomial::new(self.field, q), Polynomial::new(self.field, r))
    }

    /// `Some(q)` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &self.field.from_usize(i)).collect(),
        )
    }

    /// `T^n * self(1/T)` for `n >= deg self`.
    pub fn reversed(&self, n: usize) -> Polynomial {
        assert!(self.coeffs.len() <= n + 1, "reversal length below degree");
        let mut v = vec![self.field.zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Polynomial::new(self.field, v)
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Monic gcd and monic lcm of `a` and `b`.
pub fn poly_gcd_lcm(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let g = a.gcd(b);
    if a.is_zero() || b.is_zero() {
        return Ok((g, Polynomial::zero(a.field)));
    }
    let l = a.mul(b).exact_div(&g).expect("gcd divides the product").monic();
    Ok((g, l))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "T")?,
                1 => write!(f, "({c})T")?,
                _ if c.is_one() => write!(f, "T^{i}")?,
                _ => write!(f, "({c})T^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(Q, c)
    }

    #[test]
    fn gcd_lcm_examples() {
        let (g, l) = poly_gcd_lcm(&p(&[0, 0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!(g, p(&[0, 1]));
        assert_eq!(l, p(&[0, 0, 1]));

        let (g, l) = poly_gcd_lcm(&p(&[-2, 1]), &p(&[-3, 1])).unwrap();
        assert_eq!(g, p(&[1]));
        assert_eq!(l, p(&[6, -5, 1]));

        let f = p(&[2, 0, 4]);
        let (g, l) = poly_gcd_lcm(&f, &f).unwrap();
        assert_eq!(g, f.monic());
        assert_eq!(l, f.monic());

        assert_eq!(poly_gcd_lcm(&p(&[]), &p(&[])), Err(Error::BothZero));
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 1]);
        let (q, r) = a.divrem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[0, 2]));
        assert_eq!(q, Polynomial::new(Q, vec![Q.zero(), Q.parse_scalar("1/2").unwrap()]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn eval_derivative_reverse() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.eval(&Q.from_i64(2)), Q.from_i64(17));
        assert_eq!(f.derivative(), p(&[2, 6]));
        assert_eq!(f.reversed(3), p(&[0, 3, 2, 1]));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[]).degree_i(), -1);
    }
}
