//! Dense matrices over a [`Field`].

use std::fmt;

use super::poly::Polynomial;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from rows. Every row must have `cols` entries from `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidInput(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch { expected: field, found: x.field() });
                }
                entries.push(x);
            }
        }
        Ok(Matrix { field, rows: n, cols, entries })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, data, cols).expect("well-formed integer matrix")
    }

    pub fn row_vector(field: Field, v: Vec<Scalar>) -> Matrix {
        let n = v.len();
        Matrix::from_rows(field, vec![v], n).expect("row vector")
    }

    pub fn column_vector(field: Field, v: Vec<Scalar>) -> Matrix {
        Matrix::from_rows(field, v.into_iter().map(|x| vec![x]).collect(), 1).expect("column vector")
    }

    /// The `n x 1` column `e_i`.
    pub fn unit_column(field: Field, n: usize, i: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, 1);
        m.set(i, 0, field.one());
        m
    }

    /// The matrix unit `E_ij` of size `n x n`.
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        m.set(i, j, field.one());
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        debug_assert_eq!(x.field(), self.field);
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidInput(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_square()?;
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::InvalidInput("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row-echelon form and pivot columns. Pivots are chosen as the
    /// leftmost column with a nonzero entry, using the topmost such row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let x = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DegenerateTrace("matrix is singular".into()));
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(r.select(&rows, &cols))
    }

    /// Solve `self * x = b` for one solution, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Characteristic polynomial `det(T*Id - self)`, computed without division.
    pub fn char_poly(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let f = self.field;
        // Coefficients in descending degree; p_r is the polynomial of the
        // leading r x r block, obtained as a Toeplitz matrix times p_{r-1}.
        let mut p = vec![f.one()];
        for r in 1..=n {
            let k = r - 1;
            let a = self.get(k, k);
            let mut items = vec![f.one(), -a];
            if k > 0 {
                let lead: Vec<usize> = (0..k).collect();
                let sub = self.select(&lead, &lead);
                let mut c: Vec<Scalar> = (0..k).map(|i| self.get(i, k).clone()).collect();
                let row = &self.row(k)[..k];
                for _ in 0..k {
                    let mut dot = f.zero();
                    for (x, y) in row.iter().zip(&c) {
                        dot += &(x * y);
                    }
                    items.push(-dot);
                    c = sub.apply(&c);
                }
            }
            let mut next = vec![f.zero(); r + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    if j <= i && i - j < items.len() {
                        *slot += &(&items[i - j] * pj);
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(Polynomial::new(f, p))
    }

    pub fn pow(&self, e: usize) -> Result<Matrix> {
        self.require_square()?;
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Inertia `(positive, negative, zero)` of a symmetric rational matrix,
    /// by congruence diagonalization. `None` over a prime field or when not symmetric.
    pub fn inertia(&self) -> Option<(usize, usize, usize)> {
        if self.field != Field::Rational || *self != self.transpose() {
            return None;
        }
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..self.rows).collect();
        let (mut pos, mut neg) = (0, 0);
        loop {
            if let Some(idx) = active.iter().position(|&i| !a.get(i, i).is_zero()) {
                let i = active.remove(idx);
                let piv = a.get(i, i).clone();
                if piv.sign() == Some(1) {
                    pos += 1;
                } else {
                    neg += 1;
                }
                let inv = piv.inv().expect("nonzero");
                for &j in &active {
                    let f = a.get(j, i) * &inv;
                    for &l in &active {
                        let x = a.get(j, l) - &(&f * a.get(i, l));
                        a.set(j, l, x);
                    }
                }
                continue;
            }
            let off = active
                .iter()
                .enumerate()
                .find_map(|(p, &i)| active[p + 1..].iter().find(|&&j| !a.get(i, j).is_zero()).map(|&j| (i, j)));
            let Some((i, j)) = off else {
                return Some((pos, neg, active.len()));
            };
            // Replace basis vector i by e_i + e_j; the new diagonal entry is 2 a_ij.
            for l in 0..self.rows {
                let x = a.get(i, l) + a.get(j, l);
                a.set(i, l, x);
            }
            for l in 0..self.rows {
                let x = a.get(l, i) + a.get(l, j);
                a.set(l, i, x);
            }
        }
    }

    /// Commutator `self*other - other*self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_identity_and_rank_one() {
        let id = Matrix::identity(Q, 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn hankel_of_fibonacci_like_sequence_has_rank_two() {
        let s = [1, 2, 3, 5, 8, 13, 21];
        let rows: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| s[i + j]).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let h = Matrix::from_i64(Q, &refs);
        assert_eq!(h.rank(), 2);
        // Oracle: a nonzero 2x2 minor and vanishing 3x3 minors.
        assert_ne!(s[0] * s[2] - s[1] * s[1], 0);
        let det3 = |a: [[i64; 3]; 3]| {
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        };
        for r0 in 0..2 {
            for c0 in 0..2 {
                let m = [0, 1, 2].map(|i| [0, 1, 2].map(|j| s[r0 + i + c0 + j]));
                assert_eq!(det3(m), 0);
            }
        }
    }

    #[test]
    fn kernels() {
        assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
        let k = Matrix::from_i64(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Q.from_i64(-1), Q.from_i64(1)]);
        let k = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]).kernel_basis();
        assert_eq!(k, vec![vec![Q.one(), Q.zero()]]);
    }

    #[test]
    fn char_polys() {
        let t2 = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]).char_poly().unwrap();
        assert_eq!(t2, Polynomial::from_i64(Q, &[0, 0, 1]));
        let c = Matrix::from_i64(Q, &[&[2]]).char_poly().unwrap();
        assert_eq!(c, Polynomial::from_i64(Q, &[-2, 1]));
        let comp = Matrix::from_i64(Q, &[&[0, 1], &[1, 1]]).char_poly().unwrap();
        assert_eq!(comp, Polynomial::from_i64(Q, &[-1, -1, 1]));
        assert!(Matrix::zeros(Q, 1, 2).char_poly().is_err());
        assert_eq!(Matrix::zeros(Q, 0, 0).char_poly().unwrap(), Polynomial::from_i64(Q, &[1]));
    }

    #[test]
    fn char_poly_of_dense_3x3_matches_cofactor_expansion() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        // det(T - M) = T^3 - tr T^2 + (sum of principal 2-minors) T - det
        let tr = 16;
        let minors = (5 * 10 - 6 * 8) + (10 - 21) + (5 - 8);
        let det = (50 - 48) - 2 * (40 - 42) + 3 * (32 - 35);
        assert_eq!(m.char_poly().unwrap(), Polynomial::from_i64(Q, &[-det, minors, -tr, 1]));
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_err());
        let x = m.solve(&[Q.from_i64(3), Q.from_i64(2)]).unwrap();
        assert_eq!(x, vec![Q.from_i64(1), Q.from_i64(1)]);
        let s = Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]);
        assert!(s.solve(&[Q.one(), Q.zero()]).is_none());
    }

    #[test]
    fn inertia_of_small_forms() {
        let h = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(h.inertia(), Some((1, 1, 0)));
        let d = Matrix::from_i64(Q, &[&[2, 0, 0], &[0, 0, 0], &[0, 0, -3]]);
        assert_eq!(d.inertia(), Some((1, 1, 1)));
        assert_eq!(Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]).inertia(), None);
        assert_eq!(Matrix::identity(Field::Prime(3), 2).inertia(), None);
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = Matrix::identity(Q, 1);
        let b = Matrix::identity(Field::Prime(5), 1);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
        let bad = Matrix::from_rows(Q, vec![vec![Field::Prime(5).one()]], 1);
        assert!(matches!(bad, Err(Error::FieldMismatch { .. })));
    }
}
