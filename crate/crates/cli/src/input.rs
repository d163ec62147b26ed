//! JSON documents: schema checks with JSON paths, then conversion to core values.

use std::fmt;

use defekt_core::diagrams::{Component, Diagram, End, SignSeq};
use defekt_core::exactla::parse_rational;
use defekt_core::frobenius::{FrobeniusAlgebra, SurfaceComponent, SurfaceSpec};
use defekt_core::openclosed::{KnowledgeablePair, OpenClosedTheory};
use defekt_core::series::{
    rational_to_rep, Alphabet, CircularRepresentation, LinearRepresentation, RationalFunction1, Word,
};
use defekt_core::universal::{circular_from_rational, Theory};
use defekt_core::{Field, Matrix, Polynomial, Scalar};
use serde_json::{Map, Value};

/// A rejected document, naming the offending location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

pub type InResult<T> = std::result::Result<T, InputError>;

fn err<T>(path: &str, message: impl Into<String>) -> InResult<T> {
    Err(InputError { path: path.to_string(), message: message.into() })
}

fn sub(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

fn idx(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn object<'a>(v: &'a Value, path: &str) -> InResult<&'a Map<String, Value>> {
    v.as_object().map_or_else(|| err(path, "expected an object"), Ok)
}

fn array<'a>(v: &'a Value, path: &str) -> InResult<&'a Vec<Value>> {
    v.as_array().map_or_else(|| err(path, "expected an array"), Ok)
}

fn field_of<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> InResult<&'a Value> {
    m.get(key).map_or_else(|| err(path, format!("missing key {key:?}")), Ok)
}

fn string<'a>(v: &'a Value, path: &str) -> InResult<&'a str> {
    v.as_str().map_or_else(|| err(path, "expected a string"), Ok)
}

fn count(v: &Value, path: &str) -> InResult<usize> {
    v.as_u64().map_or_else(|| err(path, "expected a nonnegative integer"), |n| Ok(n as usize))
}

pub fn parse_field_spec(s: &str) -> InResult<Field> {
    if s == "rational" || s == "Q" {
        return Ok(Field::Rational);
    }
    let Some(p) = s.strip_prefix("prime:") else {
        return err("--field", format!("expected \"rational\" or \"prime:p\", got {s:?}"));
    };
    let p: u64 = p.parse().map_err(|_| InputError { path: "--field".into(), message: format!("bad modulus {p:?}") })?;
    Field::prime(p).map_err(|e| InputError { path: "--field".into(), message: e.to_string() })
}

/// Field resolution: the command-line override wins, then the document's own `field` key.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub field: Field,
    pub overridden: bool,
}

impl Ctx {
    pub fn new(override_field: Option<Field>) -> Ctx {
        Ctx { field: override_field.unwrap_or(Field::Rational), overridden: override_field.is_some() }
    }

    /// Adopt the document's field unless overridden.
    pub fn enter(&self, doc: &Map<String, Value>, path: &str) -> InResult<Ctx> {
        if self.overridden {
            return Ok(*self);
        }
        let Some(f) = doc.get("field") else { return Ok(*self) };
        let fp = sub(path, "field");
        let m = object(f, &fp)?;
        let field = match string(field_of(m, "type", &fp)?, &sub(&fp, "type"))? {
            "rational" => Field::Rational,
            "prime" => {
                let pp = sub(&fp, "p");
                let p = field_of(m, "p", &fp)?.as_u64().map_or_else(|| err(&pp, "expected a prime"), Ok)?;
                Field::prime(p).map_err(|e| InputError { path: pp, message: e.to_string() })?
            }
            other => return err(&sub(&fp, "type"), format!("unknown field type {other:?}")),
        };
        Ok(Ctx { field, overridden: false })
    }

    pub fn scalar(&self, v: &Value, path: &str) -> InResult<Scalar> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            _ => return err(path, "expected an exact number (integer or string such as \"3/2\")"),
        };
        let q = parse_rational(&text).map_err(|e| InputError { path: path.into(), message: e.to_string() })?;
        self.field.from_rational(&q).map_err(|e| InputError { path: path.into(), message: e.to_string() })
    }

    pub fn vector(&self, v: &Value, path: &str) -> InResult<Vec<Scalar>> {
        array(v, path)?.iter().enumerate().map(|(i, x)| self.scalar(x, &idx(path, i))).collect()
    }

    pub fn vector_of_len(&self, v: &Value, path: &str, n: usize) -> InResult<Vec<Scalar>> {
        let out = self.vector(v, path)?;
        if out.len() != n {
            return err(path, format!("expected {n} entries, found {}", out.len()));
        }
        Ok(out)
    }

    /// A `rows × cols` matrix given as an array of rows.
    pub fn matrix(&self, v: &Value, path: &str, rows: usize, cols: usize) -> InResult<Matrix> {
        let a = array(v, path)?;
        if a.len() != rows {
            return err(path, format!("expected {rows} rows, found {}", a.len()));
        }
        let data = a
            .iter()
            .enumerate()
            .map(|(i, r)| self.vector_of_len(r, &idx(path, i), cols))
            .collect::<InResult<Vec<_>>>()?;
        Ok(Matrix::from_rows(self.field, data, cols).expect("shape checked"))
    }

    pub fn polynomial(&self, v: &Value, path: &str) -> InResult<Polynomial> {
        Ok(Polynomial::new(self.field, self.vector(v, path)?))
    }

    /// `{"num": [...], "den": [...]}`; `den` defaults to `[1]`.
    pub fn rational1(&self, v: &Value, path: &str) -> InResult<RationalFunction1> {
        let m = object(v, path)?;
        let num = self.polynomial(field_of(m, "num", path)?, &sub(path, "num"))?;
        let den = match m.get("den") {
            Some(d) => self.polynomial(d, &sub(path, "den"))?,
            None => Polynomial::one(self.field),
        };
        RationalFunction1::new(num, den).map_err(|e| InputError { path: sub(path, "den"), message: e.to_string() })
    }
}

/// `"1,1,-2"` style coefficient lists, and `NUM;DEN` rational functions.
pub fn parse_rational1_arg(ctx: &Ctx, s: &str, name: &str) -> InResult<RationalFunction1> {
    let (num, den) = match s.split_once(';') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let coeffs = |t: &str, part: &str| -> InResult<Polynomial> {
        let path = format!("{name}.{part}");
        let values = t
            .split(',')
            .map(|c| c.trim())
            .filter(|c| !c.is_empty())
            .enumerate()
            .map(|(i, c)| ctx.scalar(&Value::String(c.to_string()), &idx(&path, i)))
            .collect::<InResult<Vec<_>>>()?;
        Ok(Polynomial::new(ctx.field, values))
    };
    let (n, d) = (coeffs(num, "num")?, coeffs(den, "den")?);
    RationalFunction1::new(n, d).map_err(|e| InputError { path: format!("{name}.den"), message: e.to_string() })
}

fn alphabet(v: &Value, path: &str) -> InResult<Alphabet> {
    let names = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| string(x, &idx(path, i)).map(str::to_string))
        .collect::<InResult<Vec<_>>>()?;
    Alphabet::new(names).map_err(|e| InputError { path: path.into(), message: e.to_string() })
}

fn letter_matrices(ctx: &Ctx, v: &Value, path: &str, alpha: &Alphabet, n: usize) -> InResult<Vec<Matrix>> {
    let m = object(v, path)?;
    if let Some(extra) = m.keys().find(|k| alpha.index(k).is_none()) {
        return err(&sub(path, extra), "letter is not in the alphabet");
    }
    alpha.names().iter().map(|name| ctx.matrix(field_of(m, name, path)?, &sub(path, name), n, n)).collect()
}

fn kind<'a>(m: &'a Map<String, Value>, path: &str) -> InResult<&'a str> {
    string(field_of(m, "kind", path)?, &sub(path, "kind"))
}

/// Parse a word: a string of single-character letters or an array of letter names.
pub fn word(v: &Value, path: &str, alpha: &Alphabet) -> InResult<Word> {
    let w = match v {
        Value::String(s) => alpha.parse(s),
        Value::Array(a) => {
            let names = a.iter().enumerate().map(|(i, x)| string(x, &idx(path, i))).collect::<InResult<Vec<_>>>()?;
            alpha.parse_names(&names)
        }
        _ => return err(path, "expected a word (string or array of letter names)"),
    };
    w.map_err(|e| InputError { path: path.into(), message: e.to_string() })
}

/// A theory document. Schema problems are `InputError`s; mathematical
/// inconsistencies surface as core errors from the constructors.
pub fn theory(ctx: &Ctx, v: &Value) -> InResult<std::result::Result<Theory, defekt_core::Error>> {
    let root = object(v, "$")?;
    let ctx = ctx.enter(root, "$")?;
    let alpha = alphabet(field_of(root, "alphabet", "$")?, "$.alphabet")?;

    let ip = "$.interval";
    let im = object(field_of(root, "interval", "$")?, ip)?;
    let interval = match kind(im, ip)? {
        "linrep" => {
            let n = count(field_of(im, "dim", ip)?, &sub(ip, "dim"))?;
            let init = ctx.vector_of_len(field_of(im, "init", ip)?, &sub(ip, "init"), n)?;
            let fin = ctx.vector_of_len(field_of(im, "final", ip)?, &sub(ip, "final"), n)?;
            let letters = letter_matrices(&ctx, field_of(im, "letters", ip)?, &sub(ip, "letters"), &alpha, n)?;
            let init = Matrix::from_rows(ctx.field, vec![init], n).expect("shape checked");
            let fin =
                Matrix::from_rows(ctx.field, fin.into_iter().map(|x| vec![x]).collect(), 1).expect("shape checked");
            LinearRepresentation::new(init, letters, fin)
        }
        "rational1" => {
            if alpha.len() != 1 {
                return err(ip, "a rational1 interval series needs a one-letter alphabet");
            }
            rational_to_rep(&ctx.rational1(v.get("interval").expect("present"), ip)?)
        }
        other => return err(&sub(ip, "kind"), format!("unknown interval kind {other:?}")),
    };
    let interval = match interval {
        Ok(r) => r,
        Err(e) => return Ok(Err(e)),
    };

    let cp = "$.circular";
    let cm = object(field_of(root, "circular", "$")?, cp)?;
    let circular: std::result::Result<CircularRepresentation, _> = match kind(cm, cp)? {
        "tracerep" => {
            let m = count(field_of(cm, "dim", cp)?, &sub(cp, "dim"))?;
            let letters = letter_matrices(&ctx, field_of(cm, "letters", cp)?, &sub(cp, "letters"), &alpha, m)?;
            let weight = ctx.matrix(field_of(cm, "weight", cp)?, &sub(cp, "weight"), m, m)?;
            CircularRepresentation::new(letters, weight)
        }
        "rational1" => {
            if alpha.len() != 1 {
                return err(cp, "a rational1 circular series needs a one-letter alphabet");
            }
            circular_from_rational(&ctx.rational1(root.get("circular").expect("present"), cp)?)
        }
        "trace_of_interval" => return Ok(Theory::trace_of_interval(alpha, interval)),
        other => return err(&sub(cp, "kind"), format!("unknown circular kind {other:?}")),
    };
    Ok(circular.and_then(|c| Theory::new(alpha, interval, c)))
}

fn end_ref(v: &Value, path: &str) -> InResult<End> {
    let a = array(v, path)?;
    if a.len() != 2 {
        return err(path, "expected [\"bottom\"|\"top\", index]");
    }
    let i = count(&a[1], &idx(path, 1))?;
    match string(&a[0], &idx(path, 0))? {
        "bottom" => Ok(End::Bottom(i)),
        "top" => Ok(End::Top(i)),
        other => err(&idx(path, 0), format!("expected \"bottom\" or \"top\", got {other:?}")),
    }
}

fn label(m: &Map<String, Value>, key: &str, path: &str) -> InResult<Option<usize>> {
    match m.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => count(v, &sub(path, key)).map(Some),
    }
}

fn signs(v: &Value, path: &str) -> InResult<SignSeq> {
    SignSeq::parse(string(v, path)?).map_err(|e| InputError { path: path.into(), message: e.to_string() })
}

/// A diagram document. Component kinds:
/// `arc` (`from` = tail, `to` = head, both boundary points),
/// `half` (`at` a boundary point, `label` for the inner end),
/// `interval` (`tail`/`head` labels), `circle`.
pub fn diagram(v: &Value, alpha: &Alphabet) -> InResult<std::result::Result<Diagram, defekt_core::Error>> {
    let root = object(v, "$")?;
    let bottom = signs(field_of(root, "bottom", "$")?, "$.bottom")?;
    let top = signs(field_of(root, "top", "$")?, "$.top")?;
    let comps = array(field_of(root, "components", "$")?, "$.components")?;
    let mut components = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        let p = idx("$.components", i);
        let m = object(c, &p)?;
        let w = match m.get("word") {
            Some(x) => word(x, &sub(&p, "word"), alpha)?,
            None => Word::empty(),
        };
        let comp = match kind(m, &p)? {
            "arc" => Component::strand(
                end_ref(field_of(m, "from", &p)?, &sub(&p, "from"))?,
                end_ref(field_of(m, "to", &p)?, &sub(&p, "to"))?,
                w,
            ),
            "half" => {
                let at = end_ref(field_of(m, "at", &p)?, &sub(&p, "at"))?;
                let inner = End::Inner(label(m, "label", &p)?);
                let (seq, j) = match at {
                    End::Bottom(j) => (&bottom, j),
                    End::Top(j) => (&top, j),
                    End::Inner(_) => unreachable!(),
                };
                let Some(s) = seq.0.get(j) else {
                    return err(&sub(&p, "at"), "boundary point does not exist");
                };
                let plus = *s == defekt_core::diagrams::Sign::Plus;
                let head_at_boundary = matches!(at, End::Top(_)) == plus;
                if head_at_boundary {
                    Component::strand(inner, at, w)
                } else {
                    Component::strand(at, inner, w)
                }
            }
            "interval" => Component::strand(End::Inner(label(m, "tail", &p)?), End::Inner(label(m, "head", &p)?), w),
            "circle" => Component::circle(w),
            other => return err(&sub(&p, "kind"), format!("unknown component kind {other:?}")),
        };
        components.push(comp);
    }
    Ok(Diagram::new(bottom, top, components))
}

/// `{"field"?, "dim", "basis"?, "mult", "unit", "trace"}`.
pub fn frobenius(ctx: &Ctx, v: &Value, path: &str) -> InResult<FrobeniusAlgebra> {
    let root = object(v, path)?;
    let ctx = ctx.enter(root, path)?;
    let n = count(field_of(root, "dim", path)?, &sub(path, "dim"))?;
    let basis = match root.get("basis") {
        Some(b) => {
            let bp = sub(path, "basis");
            let names = array(b, &bp)?
                .iter()
                .enumerate()
                .map(|(i, x)| string(x, &idx(&bp, i)).map(str::to_string))
                .collect::<InResult<Vec<_>>>()?;
            if names.len() != n {
                return err(&bp, format!("expected {n} names, found {}", names.len()));
            }
            names
        }
        None => (0..n).map(|i| format!("x{i}")).collect(),
    };
    let mp = sub(path, "mult");
    let rows = array(field_of(root, "mult", path)?, &mp)?;
    if rows.len() != n {
        return err(&mp, format!("expected {n} rows, found {}", rows.len()));
    }
    let mut mult = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let rp = idx(&mp, i);
        let cells = array(r, &rp)?;
        if cells.len() != n {
            return err(&rp, format!("expected {n} entries, found {}", cells.len()));
        }
        mult.push(
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| ctx.vector_of_len(c, &idx(&rp, j), n))
                .collect::<InResult<Vec<_>>>()?,
        );
    }
    let unit = ctx.vector_of_len(field_of(root, "unit", path)?, &sub(path, "unit"), n)?;
    let trace = ctx.vector_of_len(field_of(root, "trace", path)?, &sub(path, "trace"), n)?;
    FrobeniusAlgebra::new(ctx.field, basis, mult, unit, trace)
        .map_err(|e| InputError { path: path.into(), message: e.to_string() })
}

fn element(ctx: &Ctx, b: &FrobeniusAlgebra, v: &Value, path: &str) -> InResult<Vec<Scalar>> {
    if let Value::String(name) = v {
        if let Some(i) = b.basis_names().iter().position(|n| n == name) {
            return Ok(b.basis_vector(i));
        }
        return err(path, format!("unknown basis element {name:?}"));
    }
    ctx.vector_of_len(v, path, b.dim())
}

/// `{"components": [{"genus": g, "boundaries": [[element, ...], ...]}]}`;
/// elements are coordinate arrays or basis names.
pub fn surface(b: &FrobeniusAlgebra, v: &Value) -> InResult<SurfaceSpec> {
    let root = object(v, "$")?;
    let ctx = Ctx { field: b.field(), overridden: true };
    let comps = array(field_of(root, "components", "$")?, "$.components")?;
    let mut components = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        let p = idx("$.components", i);
        let m = object(c, &p)?;
        let genus = match m.get("genus") {
            Some(g) => count(g, &sub(&p, "genus"))?,
            None => 0,
        };
        let mut boundaries = Vec::new();
        if let Some(bs) = m.get("boundaries") {
            let bp = sub(&p, "boundaries");
            for (j, w) in array(bs, &bp)?.iter().enumerate() {
                let wp = idx(&bp, j);
                let elems = array(w, &wp)?
                    .iter()
                    .enumerate()
                    .map(|(k, e)| element(&ctx, b, e, &idx(&wp, k)))
                    .collect::<InResult<Vec<_>>>()?;
                boundaries.push(elems);
            }
        }
        components.push(SurfaceComponent { genus, boundaries });
    }
    Ok(SurfaceSpec { components })
}

/// `{"algebra": <algebra>, "closed": {"num", "den"}}`.
pub fn oc_theory(ctx: &Ctx, v: &Value) -> InResult<std::result::Result<OpenClosedTheory, defekt_core::Error>> {
    let root = object(v, "$")?;
    let ctx = ctx.enter(root, "$")?;
    let b = frobenius(&ctx, field_of(root, "algebra", "$")?, "$.algebra")?;
    let inner = Ctx { field: b.field(), overridden: true };
    let z0 = inner.rational1(field_of(root, "closed", "$")?, "$.closed")?;
    Ok(OpenClosedTheory::new(b, z0))
}

/// `{"open": <algebra>, "closed": <algebra>, "zipper": C×B rows, "cozipper": B×C rows}`.
pub fn knowledgeable_pair(ctx: &Ctx, v: &Value) -> InResult<KnowledgeablePair> {
    let root = object(v, "$")?;
    let ctx = ctx.enter(root, "$")?;
    let open_algebra = frobenius(&ctx, field_of(root, "open", "$")?, "$.open")?;
    let closed_algebra = frobenius(&ctx, field_of(root, "closed", "$")?, "$.closed")?;
    if open_algebra.field() != closed_algebra.field() {
        return err(
            "$.closed",
            format!("field {} differs from the open algebra's {}", closed_algebra.field(), open_algebra.field()),
        );
    }
    let inner = Ctx { field: open_algebra.field(), overridden: true };
    let (nb, nc) = (open_algebra.dim(), closed_algebra.dim());
    let zipper = inner.matrix(field_of(root, "zipper", "$")?, "$.zipper", nc, nb)?;
    let cozipper = inner.matrix(field_of(root, "cozipper", "$")?, "$.cozipper", nb, nc)?;
    Ok(KnowledgeablePair { open_algebra, closed_algebra, zipper, cozipper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rejections_name_paths() {
        let ctx = Ctx::new(None);
        let doc = json!({"alphabet": ["a"], "interval": {"kind": "rational1", "num": [1, "x"]}, "circular": {"kind": "trace_of_interval"}});
        let e = theory(&ctx, &doc).unwrap_err();
        assert_eq!(e.path, "$.interval.num[1]");
        let doc = json!({"alphabet": ["a"], "interval": {"kind": "linrep", "dim": 1, "init": [1], "final": [1], "letters": {"a": [[1]], "b": [[1]]}}, "circular": {"kind": "trace_of_interval"}});
        assert_eq!(theory(&ctx, &doc).unwrap_err().path, "$.interval.letters.b");
    }

    #[test]
    fn field_override_reduces() {
        let ctx = Ctx::new(Some(Field::prime(7).unwrap()));
        assert_eq!(ctx.scalar(&json!("3/2"), "$").unwrap(), Field::prime(7).unwrap().from_i64(5));
        assert!(ctx.scalar(&json!("1/7"), "$").is_err());
        assert!(ctx.scalar(&json!(1.5), "$").is_err());
    }

    #[test]
    fn rational_arguments() {
        let ctx = Ctx::new(None);
        let z = parse_rational1_arg(&ctx, "1;1,-2", "--zi").unwrap();
        assert_eq!(z, RationalFunction1::from_i64(Field::Rational, &[1], &[1, -2]).unwrap());
        assert_eq!(parse_rational1_arg(&ctx, "3,1", "--zi").unwrap().den().degree(), Some(0));
        assert_eq!(parse_rational1_arg(&ctx, "1;0,1", "--zi").unwrap_err().path, "--zi.den");
    }
}
