//! Finite-dimensional algebras with a trace, given by structure constants.

use crate::error::{Error, Result};
use crate::exactla::{dot, Field, Matrix, Polynomial, Scalar};

/// An algebra with basis `x_0..x_{n-1}`, products `x_i x_j = Σ_k c[i][j][k] x_k`,
/// a unit and a trace functional, all in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    field: Field,
    basis: Vec<String>,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    trace: Vec<Scalar>,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub(crate) fn ok() -> AxiomCheck {
        AxiomCheck { pass: true, witness: None }
    }

    pub(crate) fn fail(w: Witness) -> AxiomCheck {
        AxiomCheck { pass: false, witness: Some(w) }
    }
}

/// Basis indices or an element exhibiting a failed axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Triple(usize, usize, usize),
    Pair(usize, usize),
    Index(usize),
    Element(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub associative: AxiomCheck,
    pub unital: AxiomCheck,
    pub symmetric: AxiomCheck,
    pub nondegenerate: AxiomCheck,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.associative.pass && self.unital.pass && self.symmetric.pass && self.nondegenerate.pass
    }

    /// `(name, check)` pairs in a fixed order.
    pub fn checks(&self) -> [(&'static str, &AxiomCheck); 4] {
        [
            ("associative", &self.associative),
            ("unital", &self.unital),
            ("symmetric", &self.symmetric),
            ("nondegenerate", &self.nondegenerate),
        ]
    }
}

impl FrobeniusAlgebra {
    /// Validate shapes and fields. Axioms are checked separately by [`FrobeniusAlgebra::verify`].
    pub fn new(
        field: Field,
        basis: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        trace: Vec<Scalar>,
    ) -> Result<FrobeniusAlgebra> {
        let n = basis.len();
        let shape_err = |what: &str| Err(Error::InvalidInput(format!("{what} has the wrong shape for dimension {n}")));
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return shape_err("mult");
        }
        if unit.len() != n {
            return shape_err("unit");
        }
        if trace.len() != n {
            return shape_err("trace");
        }
        let all = mult.iter().flatten().flatten().chain(&unit).chain(&trace);
        for x in all {
            if x.field() != field {
                return Err(Error::FieldMismatch { expected: field, found: x.field() });
            }
        }
        Ok(FrobeniusAlgebra { field, basis, mult, unit, trace })
    }

    /// The zero algebra.
    pub fn zero(field: Field) -> FrobeniusAlgebra {
        FrobeniusAlgebra { field, basis: Vec::new(), mult: Vec::new(), unit: Vec::new(), trace: Vec::new() }
    }

    /// The ground field with `tr(1) = t`.
    pub fn ground(t: Scalar) -> FrobeniusAlgebra {
        let f = t.field();
        FrobeniusAlgebra {
            field: f,
            basis: vec!["1".into()],
            mult: vec![vec![vec![f.one()]]],
            unit: vec![f.one()],
            trace: vec![t],
        }
    }

    /// The group algebra of the cyclic group of order `n` with `tr(g^i) = δ_{i,0}`.
    pub fn cyclic_group(field: Field, n: usize) -> FrobeniusAlgebra {
        let basis = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let mult = (0..n).map(|i| (0..n).map(|j| unit_vec(field, n, (i + j) % n)).collect()).collect();
        FrobeniusAlgebra { field, basis, mult, unit: unit_vec(field, n, 0), trace: unit_vec(field, n, 0) }
    }

    /// `n x n` matrices with basis `e_ij` (index `i*n + j`) and trace `scale * tr`.
    pub fn matrix_algebra(field: Field, n: usize, scale: Scalar) -> FrobeniusAlgebra {
        let d = n * n;
        let basis = (0..n).flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1))).collect();
        let mult = (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| {
                        let (i, j) = (a / n, a % n);
                        let (k, l) = (b / n, b % n);
                        if j == k {
                            unit_vec(field, d, i * n + l)
                        } else {
                            vec![field.zero(); d]
                        }
                    })
                    .collect()
            })
            .collect();
        let unit = (0..d).map(|a| if a / n == a % n { field.one() } else { field.zero() }).collect();
        let trace = (0..d).map(|a| if a / n == a % n { scale.clone() } else { field.zero() }).collect();
        FrobeniusAlgebra { field, basis, mult, unit, trace }
    }

    /// `k[x]/(f)` for monic `f`, basis `1, x, ..., x^{d-1}`, with `tr(x^i) = trace[i]`.
    pub fn polynomial_quotient(f: &Polynomial, trace: Vec<Scalar>) -> Result<FrobeniusAlgebra> {
        let field = f.field();
        let d = f
            .degree()
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::InvalidInput("modulus must have positive degree".into()))?;
        if !f.is_monic() {
            return Err(Error::InvalidInput("modulus must be monic".into()));
        }
        let basis = (0..d)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mult = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let r = Polynomial::monomial(field.one(), i + j).divrem(f).1;
                        (0..d).map(|k| r.coeff(k)).collect()
                    })
                    .collect()
            })
            .collect();
        FrobeniusAlgebra::new(field, basis, mult, unit_vec(field, d, 0), trace)
    }

    /// Direct product `A × B`, basis of `A` then basis of `B`, trace `tr_A + tr_B`.
    pub fn product(&self, other: &FrobeniusAlgebra) -> FrobeniusAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let f = self.field;
        let mut mult = vec![vec![vec![f.zero(); n + m]; n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                mult[i][j][..n].clone_from_slice(&self.mult[i][j]);
            }
        }
        for i in 0..m {
            for j in 0..m {
                mult[n + i][n + j][n..].clone_from_slice(&other.mult[i][j]);
            }
        }
        let basis = self
            .basis
            .iter()
            .map(|b| format!("({b},0)"))
            .chain(other.basis.iter().map(|b| format!("(0,{b})")))
            .collect();
        FrobeniusAlgebra {
            field: f,
            basis,
            mult,
            unit: self.unit.iter().chain(&other.unit).cloned().collect(),
            trace: self.trace.iter().chain(&other.trace).cloned().collect(),
        }
    }

    /// Tensor product with basis `a_i ⊗ b_j` at index `i*m + j` and trace `tr_A ⊗ tr_B`.
    pub fn tensor(&self, other: &FrobeniusAlgebra) -> FrobeniusAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let f = self.field;
        let d = n * m;
        let mut mult = vec![vec![vec![f.zero(); d]; d]; d];
        for (a, row) in mult.iter_mut().enumerate() {
            for (b, out) in row.iter_mut().enumerate() {
                let (i, j) = (a / m, a % m);
                let (k, l) = (b / m, b % m);
                for (p, x) in self.mult[i][k].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (q, y) in other.mult[j][l].iter().enumerate() {
                        out[p * m + q] += &(x * y);
                    }
                }
            }
        }
        let basis = self.basis.iter().flat_map(|a| other.basis.iter().map(move |b| format!("{a}*{b}"))).collect();
        let outer = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
            u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect()
        };
        FrobeniusAlgebra {
            field: f,
            basis,
            mult,
            unit: outer(&self.unit, &other.unit),
            trace: outer(&self.trace, &other.trace),
        }
    }

    /// Re-express in the basis `x'_j = Σ_i p[i][j] x_i`. Fails if `p` is singular.
    pub fn change_basis(&self, p: &Matrix) -> Result<FrobeniusAlgebra> {
        let n = self.dim();
        let pinv = p.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                mult[a][b] = pinv.apply(&self.mul(&cols[a], &cols[b]));
            }
        }
        let trace = cols.iter().map(|c| self.tr(c)).collect();
        let basis = (0..n).map(|i| format!("b{i}")).collect();
        Ok(FrobeniusAlgebra { field: self.field, basis, mult, unit: pinv.apply(&self.unit), trace })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn trace_covector(&self) -> &[Scalar] {
        &self.trace
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dim(), i)
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn scalar_element(&self, c: &Scalar) -> Vec<Scalar> {
        self.unit.iter().map(|u| u * c).collect()
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| x * c).collect()
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

    /// Product of a sequence of elements; the empty product is the unit.
    pub fn product_of(&self, elems: &[Vec<Scalar>]) -> Vec<Scalar> {
        elems.iter().fold(self.unit.clone(), |acc, e| self.mul(&acc, e))
    }

    pub fn pow(&self, a: &[Scalar], e: usize) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn tr(&self, a: &[Scalar]) -> Scalar {
        dot(self.field, &self.trace, a)
    }

    /// `G[i][j] = tr(x_i x_j)`.
    pub fn gram(&self) -> Matrix {
        let n = self.dim();
        let rows = (0..n).map(|i| (0..n).map(|j| dot(self.field, &self.trace, &self.mult[i][j])).collect()).collect();
        Matrix::from_rows(self.field, rows, n).expect("square")
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_rows(self.field, cols, n).expect("square").transpose()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn is_central(&self, z: &[Scalar]) -> bool {
        (0..self.dim()).all(|j| {
            let x = self.basis_vector(j);
            self.mul(z, &x) == self.mul(&x, z)
        })
    }

    pub fn verify(&self) -> VerifyReport {
        let n = self.dim();
        let mut associative = AxiomCheck::ok();
        'assoc: for i in 0..n {
            for j in 0..n {
                let xij = &self.mult[i][j];
                for k in 0..n {
                    let left = self.mul(xij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &self.mult[j][k]);
                    if left != right {
                        associative = AxiomCheck::fail(Witness::Triple(i, j, k));
                        break 'assoc;
                    }
                }
            }
        }
        let mut unital = AxiomCheck::ok();
        for i in 0..n {
            let x = self.basis_vector(i);
            if self.mul(&self.unit, &x) != x || self.mul(&x, &self.unit) != x {
                unital = AxiomCheck::fail(Witness::Index(i));
                break;
            }
        }
        let g = self.gram();
        let mut symmetric = AxiomCheck::ok();
        'sym: for i in 0..n {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    symmetric = AxiomCheck::fail(Witness::Pair(j, i));
                    break 'sym;
                }
            }
        }
        let nondegenerate = match g.kernel_basis().into_iter().next() {
            None => AxiomCheck::ok(),
            Some(v) => AxiomCheck::fail(Witness::Element(v)),
        };
        VerifyReport { associative, unital, symmetric, nondegenerate }
    }

    /// Dual basis `y_j` (as coordinate vectors) with `tr(x_i y_j) = δ_ij`.
    pub fn dual_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        let inv =
            self.gram().inverse().map_err(|_| Error::DegenerateTrace("trace form has a nonzero radical".into()))?;
        Ok((0..self.dim()).map(|j| inv.column(j)).collect())
    }

    /// Render an element as a linear combination of basis names.
    pub fn format_element(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = a
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| if c.is_one() { b.clone() } else { format!("({c})*{b}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub(crate) fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}
