//! One-letter theories described by generating functions, analysed through
//! polynomial arithmetic alone.

use crate::error::Result;
use crate::exactla::{poly_gcd_lcm, Polynomial, Scalar};
use crate::series::{RationalFunction1, Word};
use crate::universal::{build_pair_algebra, Theory};

/// Everything the one-variable route computes for a pair `(Z_I, Z_∘)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneVarAnalysis {
    pub z_interval: RationalFunction1,
    pub z_circular: RationalFunction1,
    pub g_interval: Polynomial,
    pub g_circular: Polynomial,
    pub g_alpha: Polynomial,
    pub z_trace: RationalFunction1,
    pub z_circ_minus_trace: RationalFunction1,
    pub g_circ_interval: Polynomial,
    /// `(dim A(+), dim U, dim K)`.
    pub dims: (usize, usize, usize),
}

/// `T^d · Q(1/T)` with `d = max(deg Q, deg P + 1)`: the minimal polynomial of
/// the shift on the coefficient sequence of `z`.
pub fn g_of(z: &RationalFunction1) -> Polynomial {
    let d = (z.num().degree_i() + 1).max(z.den().degree_i()) as usize;
    z.den().reversed(d).monic()
}

/// `Σ_n tr(a^n) T^n` for `a` acting on the state space of `z`, computed as
/// `n - T q'(T)/q(T)` with `q` the reversal of `g_of(z)`.
pub fn trace_series_1var(z: &RationalFunction1) -> RationalFunction1 {
    let f = z.field();
    let g = g_of(z);
    let n = g.degree().expect("g is monic");
    let q = g.reversed(n);
    let t_dq = Polynomial::monomial(f.one(), 1).mul(&q.derivative());
    let num = q.scale(&f.from_usize(n)).sub(&t_dq);
    RationalFunction1::new(num, q).expect("q(0) = 1")
}

pub fn analyze(zi: &RationalFunction1, zc: &RationalFunction1) -> Result<OneVarAnalysis> {
    let g_interval = g_of(zi);
    let g_circular = g_of(zc);
    let (_, g_alpha) = poly_gcd_lcm(&g_interval, &g_circular)?;
    let z_trace = trace_series_1var(zi);
    let z_circ_minus_trace = zc.sub(&z_trace);
    let g_circ_interval = g_of(&z_circ_minus_trace);
    let deg = |p: &Polynomial| p.degree().expect("nonzero");
    let dims = (deg(&g_interval), deg(&g_alpha), deg(&g_circ_interval));
    Ok(OneVarAnalysis {
        z_interval: zi.clone(),
        z_circular: zc.clone(),
        g_interval,
        g_circular,
        g_alpha,
        z_trace,
        z_circ_minus_trace,
        g_circ_interval,
        dims,
    })
}

/// Outcome of comparing the one-variable route with the general construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub pass: bool,
    pub onevar_dims: Option<(usize, usize, usize)>,
    pub universal_dims: Option<(usize, usize, usize)>,
    pub failures: Vec<String>,
    /// First word `a^n` on which `tr_K(p*(a^n))` disagrees with the series.
    pub counterexample: Option<Word>,
}

/// Build the same theory both ways and compare dimensions and the traces
/// `tr_K(p*(a^n))` against the coefficients of `Z_∘ - Z_I^tr` for `n ≤ depth`.
pub fn cross_check(zi: &RationalFunction1, zc: &RationalFunction1, depth: usize) -> CrossCheckReport {
    let mut report = CrossCheckReport {
        pass: false,
        onevar_dims: None,
        universal_dims: None,
        failures: Vec::new(),
        counterexample: None,
    };
    let analysis = match analyze(zi, zc) {
        Ok(a) => a,
        Err(e) => {
            report.failures.push(format!("one-variable analysis failed: {e}"));
            return report;
        }
    };
    report.onevar_dims = Some(analysis.dims);
    let pa = match Theory::from_generating_functions(zi, zc).and_then(|t| build_pair_algebra(&t)) {
        Ok(p) => p,
        Err(e) => {
            report.failures.push(format!("general construction failed: {e}"));
            return report;
        }
    };
    let udims = (pa.k(), pa.u_dim(), pa.k_dim());
    report.universal_dims = Some(udims);
    let names = ["dim A(+)", "dim U", "dim K"];
    let pairs = [(analysis.dims.0, udims.0), (analysis.dims.1, udims.1), (analysis.dims.2, udims.2)];
    for (name, (a, b)) in names.iter().zip(pairs) {
        if a != b {
            report.failures.push(format!("{name}: one-variable {a}, general {b}"));
        }
    }
    let coeffs: Vec<Scalar> = analysis.z_circ_minus_trace.taylor(depth + 1);
    for (n, c) in coeffs.iter().enumerate() {
        let w = Word::power(0, n);
        let got = match pa.project_word(&w) {
            Ok(x) => pa.trace_k(&x),
            Err(e) => {
                report.failures.push(format!("projection of a^{n} failed: {e}"));
                break;
            }
        };
        if &got != c {
            report.failures.push(format!("tr_K(p*(a^{n})) = {got}, series coefficient {c}"));
            report.counterexample = Some(w);
            break;
        }
    }
    report.pass = report.failures.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction1 {
        RationalFunction1::from_i64(Q, num, den).unwrap()
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(Q, c)
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(g_of(&rf(&[1], &[1, -2])), poly(&[-2, 1]));
        assert_eq!(g_of(&rf(&[3, 1], &[1])), poly(&[0, 0, 1]));
        assert_eq!(g_of(&rf(&[1, 1], &[1, -1, -1])), poly(&[-1, -1, 1]));
        assert_eq!(g_of(&RationalFunction1::zero(Q)), poly(&[1]));
    }

    #[test]
    fn trace_series_examples() {
        // 1/(2-T)^3 written with Q(0) = 1.
        let eighth = Q.parse_scalar("1/8").unwrap();
        let z = RationalFunction1::new(
            Polynomial::constant(eighth),
            Polynomial::new(Q, ["1", "-3/2", "3/4", "-1/8"].iter().map(|c| Q.parse_scalar(c).unwrap()).collect()),
        )
        .unwrap();
        let tr = trace_series_1var(&z);
        let expected =
            RationalFunction1::new(poly(&[3]), Polynomial::new(Q, vec![Q.one(), Q.parse_scalar("-1/2").unwrap()]))
                .unwrap();
        assert_eq!(tr, expected);
        assert_eq!(trace_series_1var(&rf(&[1, 2, 5], &[1])), rf(&[3], &[1]));
        assert_eq!(trace_series_1var(&rf(&[3, 1], &[1])), rf(&[2], &[1]));
    }

    #[test]
    fn two_parameter_example() {
        // t = 1, λ = 3: Z_I = 1/(1-2T), Z_∘ = 2/(1-T) + 1/(1-2T).
        let zi = rf(&[1], &[1, -2]);
        let zc = rf(&[2], &[1, -1]).add(&zi);
        let a = analyze(&zi, &zc).unwrap();
        assert_eq!(a.z_circ_minus_trace, rf(&[2], &[1, -1]));
        assert_eq!(a.g_circ_interval, poly(&[-1, 1]));
        assert_eq!(a.dims, (1, 2, 1));
        assert!(cross_check(&zi, &zc, 8).pass);
    }

    #[test]
    fn nilpotent_example() {
        let zi = rf(&[3, 1], &[1]);
        let a = analyze(&zi, &rf(&[5], &[1])).unwrap();
        assert_eq!(a.z_circ_minus_trace, rf(&[3], &[1]));
        assert_eq!(a.g_circ_interval, poly(&[0, 1]));
        assert_eq!(a.g_alpha, poly(&[0, 0, 1]));
        assert_eq!(a.dims, (2, 2, 1));
        assert!(cross_check(&zi, &rf(&[5], &[1]), 8).pass);

        let b = analyze(&zi, &rf(&[2], &[1])).unwrap();
        assert!(b.z_circ_minus_trace.is_zero());
        assert_eq!(b.dims.2, 0);
    }

    #[test]
    fn cross_check_reports_instead_of_panicking() {
        let zi = rf(&[1], &[1, -2]);
        let zc = rf(&[1], &[1, 0, -3]);
        let r = cross_check(&zi, &zc, 10);
        assert!(r.pass, "{:?}", r.failures);
        assert!(r.counterexample.is_none());
    }
}
