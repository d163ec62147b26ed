//! JSON renderings. Scalars are exact strings; counts are integers.

use defekt_core::frobenius::{AxiomCheck, FrobeniusAlgebra, Witness};
use defekt_core::series::RationalFunction1;
use defekt_core::{Matrix, Polynomial, Scalar};
use serde_json::{json, Map, Value};

pub fn scalar(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r)).collect())
}

pub fn polynomial(p: &Polynomial) -> Value {
    vector(p.coeffs())
}

pub fn rational1(z: &RationalFunction1) -> Value {
    json!({"num": polynomial(z.num()), "den": polynomial(z.den())})
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Triple(i, j, k) => json!({"triple": [i, j, k]}),
        Witness::Pair(i, j) => json!({"pair": [i, j]}),
        Witness::Index(i) => json!({"index": i}),
        Witness::Element(e) => json!({"element": vector(e)}),
    }
}

pub fn check(c: &AxiomCheck) -> Value {
    let mut m = Map::new();
    m.insert("pass".into(), Value::Bool(c.pass));
    if let Some(w) = &c.witness {
        m.insert("witness".into(), witness(w));
    }
    Value::Object(m)
}

pub fn checks<'a>(items: impl IntoIterator<Item = (&'a str, &'a AxiomCheck)>) -> Value {
    Value::Object(items.into_iter().map(|(n, c)| (n.to_string(), check(c))).collect())
}

/// The algebra document format accepted by the input layer.
pub fn frobenius(b: &FrobeniusAlgebra) -> Value {
    let field = match b.field() {
        defekt_core::Field::Rational => json!({"type": "rational"}),
        defekt_core::Field::Prime(p) => json!({"type": "prime", "p": p}),
    };
    let mult: Vec<Value> =
        b.structure_constants().iter().map(|row| Value::Array(row.iter().map(|c| vector(c)).collect())).collect();
    json!({
        "field": field,
        "dim": b.dim(),
        "basis": b.basis_names(),
        "mult": mult,
        "unit": vector(b.unit()),
        "trace": vector(b.trace_covector()),
    })
}
