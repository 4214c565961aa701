//! JSON encodings of scalars, algebras, functionals, forms, multisets and
//! reports.
//!
//! Scalars: booleans as `true`/`false`, rationals as canonical `"p/q"`
//! strings, Gaussian rationals as `{"re": "p/q", "im": "p/q"}` and `GF(9)`
//! elements as `{"re": 0..2, "im": 0..2}`.

use std::sync::Arc;

use involute_core::fmod::{FreeModule, Matrix, SelfConjugate};
use involute_core::gns::{form_from_gram, scalar_codomain, HermitianFunctional, SesquiForm};
use involute_core::multiset::Multiset;
use involute_core::scalars::{
    Booleans, GaussianRational, GaussianRationals, Gf9, Gf9Field, InvolutiveSemiring, Rational, Rationals,
};
use involute_core::staralg::{group_algebra, GroupTable, StarAlgebra};
use involute_core::words::{Mode, SignedWord};
use involute_core::LawResult;
use serde_json::{json, Map, Value};
use thiserror::Error;

/// Malformed input, reported with exit code 2.
#[derive(Debug, Error)]
#[error("{0}")]
pub struct FormatError(pub String);

impl FormatError {
    pub fn new(msg: impl Into<String>) -> Self {
        Self(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormatError::new(msg))
}

/// A scalar instance with a JSON element encoding.
pub trait JsonScalar: InvolutiveSemiring + Clone + Send + Sync + 'static {
    fn to_json(&self, e: &Self::Elem) -> Value;
    fn from_json(&self, v: &Value) -> Result<Self::Elem>;
}

impl JsonScalar for Booleans {
    fn to_json(&self, e: &bool) -> Value {
        Value::Bool(*e)
    }
    fn from_json(&self, v: &Value) -> Result<bool> {
        v.as_bool().ok_or_else(|| FormatError::new(format!("expected a boolean, found {v}")))
    }
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse().map_err(|e| FormatError::new(format!("rational {s:?}: {e}"))),
        _ => err(format!("expected a rational string \"p/q\", found {v}")),
    }
}

impl JsonScalar for Rationals {
    fn to_json(&self, e: &Rational) -> Value {
        Value::String(e.to_string())
    }
    fn from_json(&self, v: &Value) -> Result<Rational> {
        rational_from_json(v)
    }
}

fn object_fields<'a>(v: &'a Value, fields: &[&str], what: &str) -> Result<Vec<&'a Value>> {
    let obj = v.as_object().ok_or_else(|| FormatError::new(format!("expected {what}, found {v}")))?;
    if let Some(extra) = obj.keys().find(|k| !fields.contains(&k.as_str())) {
        return err(format!("unexpected field {extra:?} in {what}"));
    }
    fields
        .iter()
        .map(|f| obj.get(*f).ok_or_else(|| FormatError::new(format!("missing field {f:?} in {what}"))))
        .collect()
}

impl JsonScalar for GaussianRationals {
    fn to_json(&self, e: &GaussianRational) -> Value {
        json!({"re": e.re.to_string(), "im": e.im.to_string()})
    }
    fn from_json(&self, v: &Value) -> Result<GaussianRational> {
        let parts = object_fields(v, &["re", "im"], "a Gaussian rational {\"re\", \"im\"}")?;
        Ok(GaussianRational::new(rational_from_json(parts[0])?, rational_from_json(parts[1])?))
    }
}

impl JsonScalar for Gf9Field {
    fn to_json(&self, e: &Gf9) -> Value {
        json!({"re": e.re(), "im": e.im()})
    }
    fn from_json(&self, v: &Value) -> Result<Gf9> {
        let parts = object_fields(v, &["re", "im"], "a GF(9) element {\"re\", \"im\"}")?;
        let digit = |p: &Value| match p.as_u64() {
            Some(d) if d < 3 => Ok(d as i64),
            _ => err(format!("GF(9) components are 0, 1 or 2, found {p}")),
        };
        Ok(Gf9::new(digit(parts[0])?, digit(parts[1])?))
    }
}

/// Calls `$body` with `$s` bound to the scalar instance named by `$tag`.
#[macro_export]
macro_rules! with_scalars {
    ($tag:expr, $s:ident => $body:expr) => {
        match $tag {
            "bool" => {
                let $s = involute_core::scalars::Booleans;
                $body
            }
            "rat" => {
                let $s = involute_core::scalars::Rationals;
                $body
            }
            "gauss" => {
                let $s = involute_core::scalars::GaussianRationals;
                $body
            }
            "gf9" => {
                let $s = involute_core::scalars::Gf9Field;
                $body
            }
            other => Err($crate::json::FormatError::new(format!(
                "unknown scalars {other:?}; expected bool, rat, gauss or gf9"
            ))
            .into()),
        }
    };
}

pub fn parse_text(text: &str, origin: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| FormatError::new(format!("{origin}: {e}")))
}

pub fn field<'a>(v: &'a Value, name: &str, what: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| FormatError::new(format!("{what}: missing field {name:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| FormatError::new(format!("{what}: expected an array, found {v}")))
}

pub fn scalars_tag<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    field(v, "scalars", what)?.as_str().ok_or_else(|| FormatError::new(format!("{what}: \"scalars\" must be a string")))
}

pub fn vector<S: JsonScalar>(s: &S, v: &Value, len: usize, what: &str) -> Result<Vec<S::Elem>> {
    let items = array(v, what)?;
    if items.len() != len {
        return err(format!("{what}: expected {len} entries, found {}", items.len()));
    }
    items.iter().map(|x| s.from_json(x)).collect()
}

pub fn vector_json<S: JsonScalar>(s: &S, v: &[S::Elem]) -> Value {
    Value::Array(v.iter().map(|x| s.to_json(x)).collect())
}

pub fn matrix<S: JsonScalar>(s: &S, v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix<S::Elem>> {
    let items = array(v, what)?;
    if items.len() != rows {
        return err(format!("{what}: expected {rows} rows, found {}", items.len()));
    }
    let rows: Vec<Vec<S::Elem>> =
        items.iter().enumerate().map(|(i, r)| vector(s, r, cols, &format!("{what} row {i}"))).collect::<Result<_>>()?;
    Matrix::from_rows(rows).map_err(|e| FormatError::new(format!("{what}: {e}")))
}

pub fn matrix_json<S: JsonScalar>(s: &S, m: &Matrix<S::Elem>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(s, r)).collect())
}

pub fn module(v: &Value) -> Result<(String, FreeModule)> {
    let tag = scalars_tag(v, "module")?.to_string();
    let names: Vec<String> = array(field(v, "basis", "module")?, "module basis")?
        .iter()
        .map(|n| n.as_str().map(str::to_string).ok_or_else(|| FormatError::new("module basis names must be strings")))
        .collect::<Result<_>>()?;
    let module = FreeModule::new(names).map_err(|e| FormatError::new(format!("module: {e}")))?;
    Ok((tag, module))
}

/// The scalar tag of an algebra document.
pub fn algebra_scalars(v: &Value) -> Result<String> {
    if let Some(m) = v.get("module") {
        return Ok(scalars_tag(m, "algebra module")?.to_string());
    }
    Ok(scalars_tag(v, "algebra")?.to_string())
}

/// An algebra by structure constants,
/// `{"module", "unit", "structconst", "J", "mode"}` with `structconst[i][j][k]`
/// the coefficient of `eₖ` in `eᵢ·eⱼ`, or a group algebra
/// `{"scalars", "group": {"order", "table"}}`. `"name"` is optional.
pub fn algebra<S: JsonScalar>(s: &S, v: &Value, default_name: &str) -> Result<StarAlgebra<S>> {
    let name = match v.get("name") {
        None => default_name.to_string(),
        Some(n) => n.as_str().ok_or_else(|| FormatError::new("algebra name must be a string"))?.to_string(),
    };
    if let Some(g) = v.get("group") {
        let order = field(g, "order", "group")?.as_u64().ok_or_else(|| FormatError::new("group order must be a number"))?;
        let table: Vec<Vec<usize>> = serde_json::from_value(field(g, "table", "group")?.clone())
            .map_err(|e| FormatError::new(format!("group table: {e}")))?;
        if table.len() as u64 != order {
            return err(format!("group table has {} rows, order is {order}", table.len()));
        }
        let table = GroupTable::new(table).map_err(|e| FormatError::new(format!("group: {e}")))?;
        return Ok(group_algebra(s, &table).with_name(name));
    }
    let (_, module) = module(field(v, "module", "algebra")?)?;
    let n = module.dim();
    let unit = vector(s, field(v, "unit", "algebra")?, n, "unit")?;
    let mut structconst = Vec::with_capacity(n * n * n);
    let outer = array(field(v, "structconst", "algebra")?, "structconst")?;
    if outer.len() != n {
        return err(format!("structconst: expected {n} blocks, found {}", outer.len()));
    }
    for (i, block) in outer.iter().enumerate() {
        let rows = array(block, "structconst block")?;
        if rows.len() != n {
            return err(format!("structconst[{i}]: expected {n} rows, found {}", rows.len()));
        }
        for (j, row) in rows.iter().enumerate() {
            structconst.extend(vector(s, row, n, &format!("structconst[{i}][{j}]"))?);
        }
    }
    let j = matrix(s, field(v, "J", "algebra")?, n, n, "J")?;
    let mode_text = field(v, "mode", "algebra")?.as_str().ok_or_else(|| FormatError::new("mode must be a string"))?;
    let mode = Mode::parse(mode_text).ok_or_else(|| FormatError::new(format!("unknown mode {mode_text:?}")))?;
    StarAlgebra::new(s.clone(), name, module, unit, structconst, j, mode).map_err(|e| FormatError::new(format!("algebra: {e}")))
}

pub fn algebra_json<S: JsonScalar>(alg: &StarAlgebra<S>) -> Value {
    let s = alg.scalars();
    json!({
        "name": alg.name(),
        "module": {"scalars": s.name(), "basis": alg.module().basis()},
        "unit": vector_json(s, alg.unit()),
        "structconst": alg.structconst_nested().iter()
            .map(|b| b.iter().map(|r| vector_json(s, r)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "J": matrix_json(s, alg.j()),
        "mode": alg.mode().as_str(),
    })
}

/// `"codomain": {"J": [[…]]}`; absent means the scalars.
fn codomain<S: JsonScalar>(s: &S, v: &Value) -> Result<Arc<SelfConjugate<S::Elem>>> {
    match v.get("codomain") {
        None => Ok(Arc::new(scalar_codomain(s))),
        Some(c) => {
            let rows = array(field(c, "J", "codomain")?, "codomain J")?.len();
            let j = matrix(s, field(c, "J", "codomain")?, rows, rows, "codomain J")?;
            SelfConjugate::new(s, FreeModule::standard(rows), j)
                .map(Arc::new)
                .map_err(|e| FormatError::new(format!("codomain: {e}")))
        }
    }
}

fn is_scalar_codomain<S: JsonScalar>(s: &S, c: &SelfConjugate<S::Elem>) -> bool {
    c.dim() == 1 && c.j().is_identity(s)
}

/// A codomain value: a coordinate list, or a bare scalar when the codomain
/// has dimension one.
fn value<S: JsonScalar>(s: &S, v: &Value, dim: usize, what: &str) -> Result<Vec<S::Elem>> {
    if dim == 1 && !v.is_array() {
        return Ok(vec![s.from_json(v)?]);
    }
    vector(s, v, dim, what)
}

fn value_json<S: JsonScalar>(s: &S, v: &[S::Elem], scalar: bool) -> Value {
    if scalar { s.to_json(&v[0]) } else { vector_json(s, v) }
}

fn check_algebra_name<S: JsonScalar>(v: &Value, alg: &StarAlgebra<S>, what: &str) -> Result<()> {
    match v.get("algebra") {
        Some(Value::String(n)) if n != alg.name() => {
            err(format!("{what} is for algebra {n:?}, not {:?}", alg.name()))
        }
        Some(Value::String(_)) | None => Ok(()),
        Some(other) => err(format!("{what}: \"algebra\" must be a name, found {other}")),
    }
}

/// `{"algebra": name?, "codomain"?, "values": [value per basis element]}`.
pub fn functional<S: JsonScalar>(alg: &Arc<StarAlgebra<S>>, v: &Value) -> Result<HermitianFunctional<S>> {
    let s = alg.scalars();
    check_algebra_name(v, alg, "functional")?;
    let cod = codomain(s, v)?;
    let items = array(field(v, "values", "functional")?, "functional values")?;
    if items.len() != alg.dim() {
        return err(format!("functional: expected {} values, found {}", alg.dim(), items.len()));
    }
    let values = items
        .iter()
        .enumerate()
        .map(|(i, x)| value(s, x, cod.dim(), &format!("value {i}")))
        .collect::<Result<Vec<_>>>()?;
    HermitianFunctional::new(alg.clone(), cod, values).map_err(|e| FormatError::new(format!("functional: {e}")))
}

fn codomain_json<S: JsonScalar>(s: &S, c: &SelfConjugate<S::Elem>, out: &mut Map<String, Value>) {
    if !is_scalar_codomain(s, c) {
        out.insert("codomain".into(), json!({"J": matrix_json(s, c.j())}));
    }
}

pub fn functional_json<S: JsonScalar>(f: &HermitianFunctional<S>) -> Value {
    let s = f.algebra().scalars();
    let scalar = is_scalar_codomain(s, f.codomain());
    let mut out = Map::new();
    out.insert("algebra".into(), Value::String(f.algebra().name().into()));
    codomain_json(s, f.codomain(), &mut out);
    out.insert("values".into(), Value::Array(f.values().iter().map(|v| value_json(s, v, scalar)).collect()));
    Value::Object(out)
}

/// `{"algebra": name?, "codomain"?, "gram": [[value, …], …]}`.
pub fn form<S: JsonScalar>(alg: &Arc<StarAlgebra<S>>, v: &Value) -> Result<SesquiForm<S>> {
    let s = alg.scalars();
    check_algebra_name(v, alg, "form")?;
    let cod = codomain(s, v)?;
    let n = alg.dim();
    let rows = array(field(v, "gram", "form")?, "gram")?;
    if rows.len() != n {
        return err(format!("gram: expected {n} rows, found {}", rows.len()));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let items = array(r, "gram row")?;
            if items.len() != n {
                return err(format!("gram row {i}: expected {n} entries, found {}", items.len()));
            }
            items.iter().enumerate().map(|(j, x)| value(s, x, cod.dim(), &format!("gram[{i}][{j}]"))).collect()
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    form_from_gram(alg.clone(), cod, rows).map_err(|e| FormatError::new(format!("form: {e}")))
}

pub fn form_json<S: JsonScalar>(p: &SesquiForm<S>) -> Value {
    let s = p.algebra().scalars();
    let scalar = is_scalar_codomain(s, p.codomain());
    let mut out = Map::new();
    out.insert("algebra".into(), Value::String(p.algebra().name().into()));
    codomain_json(s, p.codomain(), &mut out);
    let rows: Vec<Value> =
        p.gram_rows().iter().map(|r| Value::Array(r.iter().map(|v| value_json(s, v, scalar)).collect())).collect();
    out.insert("gram".into(), Value::Array(rows));
    Value::Object(out)
}

/// A multiset key: a string, or (for tensors) an array of keys.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Key {
    Name(String),
    Tuple(Vec<Key>),
}

impl Key {
    pub fn from_json(v: &Value) -> Result<Key> {
        match v {
            Value::String(s) => Ok(Key::Name(s.clone())),
            Value::Array(items) => items.iter().map(Key::from_json).collect::<Result<_>>().map(Key::Tuple),
            _ => err(format!("multiset keys are strings or arrays of keys, found {v}")),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Key::Name(s) => Value::String(s.clone()),
            Key::Tuple(items) => Value::Array(items.iter().map(Key::to_json).collect()),
        }
    }
}

impl std::fmt::Display for Key {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Key::Name(s) => f.write_str(s),
            Key::Tuple(items) => {
                let parts: Vec<String> = items.iter().map(Key::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

/// The scalar tag of a multiset document, if it names one.
pub fn multiset_scalars(v: &Value) -> Option<&str> {
    v.get("entries").and(v.get("scalars")).and_then(Value::as_str)
}

/// `{"scalars", "entries": [[key, coeff], …]}` or a plain object
/// `{key: coeff, …}`. Keys may repeat in the entry form; their coefficients
/// are added.
pub fn multiset<S: JsonScalar, K: Ord + Clone>(
    s: &S,
    v: &Value,
    key: &dyn Fn(&Value) -> Result<K>,
) -> Result<Multiset<K, S::Elem>> {
    let pairs: Vec<(K, S::Elem)> = match v.get("entries") {
        Some(entries) => {
            let tag = scalars_tag(v, "multiset")?;
            if tag != s.name() {
                return err(format!("multiset has scalars {tag:?}, expected {:?}", s.name()));
            }
            if let Some(extra) = v.as_object().and_then(|o| o.keys().find(|k| *k != "entries" && *k != "scalars")) {
                return err(format!("unexpected field {extra:?} in multiset"));
            }
            array(entries, "multiset entries")?
                .iter()
                .map(|e| match e.as_array().map(Vec::as_slice) {
                    Some([k, c]) => Ok((key(k)?, s.from_json(c)?)),
                    _ => err(format!("multiset entries are [key, coefficient] pairs, found {e}")),
                })
                .collect::<Result<_>>()?
        }
        None => {
            let obj = v.as_object().ok_or_else(|| FormatError::new(format!("expected a multiset, found {v}")))?;
            obj.iter().map(|(k, c)| Ok((key(&Value::String(k.clone()))?, s.from_json(c)?))).collect::<Result<_>>()?
        }
    };
    Ok(Multiset::from_entries(s, pairs))
}

pub fn multiset_json<S: JsonScalar, K: Ord + Clone>(s: &S, m: &Multiset<K, S::Elem>, key: &dyn Fn(&K) -> Value) -> Value {
    let entries: Vec<Value> = m.iter().map(|(k, c)| json!([key(k), s.to_json(c)])).collect();
    json!({"scalars": s.name(), "entries": entries})
}

pub fn word_json(w: &SignedWord) -> Value {
    Value::Array(w.to_pairs().into_iter().map(|(b, v)| json!([b, v])).collect())
}

pub fn report_line(e: &LawResult) -> Value {
    json!({
        "suite": e.suite,
        "law": e.law,
        "instance": e.instance,
        "verdict": e.verdict.as_str(),
        "witness": e.witness,
    })
}
