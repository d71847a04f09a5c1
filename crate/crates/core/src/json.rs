//! JSON codecs for functionals, tree maps, ideal specs and curves.
//!
//! Values are written as strings (`"p/q"` for rationals, `"c0,c1,..."` for
//! truncated series), keys in canonical basis order, zero entries omitted.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::characters::TreeValues;
use crate::error::{Error, Result};
use crate::evolution::FunctionalCurve;
use crate::functional::TruncatedFunctional;
use crate::hopf::{BasisElement, GradedVector, HopfKind, HopfStructure};
use crate::ideals::HopfIdealSpec;
use crate::ring::{parse_rational, Ring, RingKind};
use crate::trees::parse_tree;

/// Parses JSON text, reporting failures with a byte offset.
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        let offset = text
            .split_inclusive('\n')
            .take(e.line().saturating_sub(1))
            .map(str::len)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::parse(offset, format!("invalid JSON: {e}"))
    })
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::parse(0, format!("{what} must be a JSON object")))
}

fn string_field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<Option<&'a str>> {
    match obj.get(key) {
        None => Ok(None),
        Some(Value::String(s)) => Ok(Some(s)),
        Some(_) => Err(Error::parse(0, format!("`{key}` must be a string"))),
    }
}

fn truncation_field(obj: &Map<String, Value>) -> Result<Option<usize>> {
    match obj.get("truncation") {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|n| Some(n as usize))
            .ok_or_else(|| Error::parse(0, "`truncation` must be a non-negative integer")),
    }
}

/// Scalar entries may be strings or plain JSON integers.
fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() => Ok(n.to_string()),
        _ => Err(Error::parse(0, format!("expected a coefficient string, found {v}"))),
    }
}

/// The optional `hopf`/`ring`/`truncation` fields of a functional document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Header {
    pub hopf: Option<HopfKind>,
    pub ring: Option<RingKind>,
    pub truncation: Option<usize>,
}

impl Header {
    pub fn read(v: &Value) -> Result<Header> {
        let obj = object(v, "functional")?;
        Ok(Header {
            hopf: string_field(obj, "hopf")?.map(str::parse).transpose()?,
            ring: string_field(obj, "ring")?.map(str::parse).transpose()?,
            truncation: truncation_field(obj)?,
        })
    }

    /// Fills absent fields from `other`; conflicting fields are an error.
    pub fn merge(self, other: Header) -> Result<Header> {
        fn pick<T: PartialEq + std::fmt::Display + Copy>(a: Option<T>, b: Option<T>, what: &str) -> Result<Option<T>> {
            match (a, b) {
                (Some(x), Some(y)) if x != y => {
                    Err(Error::Incompatible(format!("{what} `{x}` conflicts with `{y}`")))
                }
                (x, y) => Ok(x.or(y)),
            }
        }
        Ok(Header {
            hopf: pick(self.hopf, other.hopf, "hopf")?,
            ring: pick(self.ring, other.ring, "ring")?,
            truncation: pick(self.truncation, other.truncation, "truncation")?,
        })
    }
}

pub fn functional_to_json<R: Ring>(phi: &TruncatedFunctional<R>) -> Value {
    let hopf = phi.hopf();
    let mut values = Map::new();
    for (b, v) in hopf.basis().iter().zip(phi.values()) {
        if !v.is_zero() {
            values.insert(b.to_string(), Value::String(v.to_string()));
        }
    }
    let mut out = Map::new();
    out.insert("hopf".into(), Value::String(hopf.kind().to_string()));
    out.insert("ring".into(), Value::String(R::kind(phi.context()).to_string()));
    out.insert("truncation".into(), Value::from(hopf.truncation()));
    out.insert("values".into(), Value::Object(values));
    Value::Object(out)
}

/// Reads a functional on `hopf`. Header fields that are present must match
/// the structure and ring; absent ones are taken from them.
pub fn functional_from_json<R: Ring>(
    v: &Value,
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
) -> Result<TruncatedFunctional<R>> {
    let header = Header::read(v)?;
    header.merge(Header {
        hopf: Some(hopf.kind()),
        ring: Some(R::kind(ctx)),
        truncation: Some(hopf.truncation()),
    })?;
    let obj = object(v, "functional")?;
    let mut phi = TruncatedFunctional::zero(hopf, ctx);
    let Some(values) = obj.get("values") else {
        return Ok(phi);
    };
    let mut seen = BTreeSet::new();
    for (key, val) in object(values, "`values`")? {
        let b = hopf.parse_basis(key)?;
        let i = hopf.position(&b)?;
        if !seen.insert(i) {
            return Err(Error::parse(0, format!("basis element `{b}` given twice")));
        }
        phi.set(i, R::parse(ctx, &scalar_text(val)?)?);
    }
    Ok(phi)
}

pub fn graded_vector_to_json(v: &GradedVector) -> Value {
    Value::Object(
        v.terms()
            .map(|(b, c)| (b.to_string(), Value::String(c.to_string())))
            .collect(),
    )
}

pub fn graded_vector_from_json(v: &Value, kind: HopfKind) -> Result<GradedVector> {
    let mut out = GradedVector::new();
    for (key, val) in object(v, "graded vector")? {
        let b: BasisElement = kind.parse_basis(key)?;
        if !out.coefficient(&b).is_zero() {
            return Err(Error::parse(0, format!("basis element `{b}` given twice")));
        }
        out.add_term(b, parse_rational(&scalar_text(val)?)?);
    }
    Ok(out)
}

pub fn tree_values_to_json<R: Ring>(a: &TreeValues<R>) -> Value {
    let mut entries: Vec<_> = a.iter().collect();
    entries.sort_by(|(s, _), (t, _)| s.order().cmp(&t.order()).then_with(|| s.cmp(t)));
    let trees: Map<String, Value> = entries
        .into_iter()
        .map(|(t, v)| (t.to_string(), Value::String(v.to_string())))
        .collect();
    let mut out = Map::new();
    out.insert("truncation".into(), Value::from(a.truncation()));
    out.insert("trees".into(), Value::Object(trees));
    Value::Object(out)
}

/// Reads a tree map; `default_truncation` applies when the field is absent.
pub fn tree_values_from_json<R: Ring>(
    v: &Value,
    ctx: &R::Context,
    default_truncation: usize,
) -> Result<TreeValues<R>> {
    let obj = object(v, "tree map")?;
    let n = truncation_field(obj)?.unwrap_or(default_truncation);
    let mut a = TreeValues::new(ctx, n);
    if let Some(trees) = obj.get("trees") {
        let mut seen = BTreeSet::new();
        for (key, val) in object(trees, "`trees`")? {
            let t = parse_tree(key)?;
            if !seen.insert(t.clone()) {
                return Err(Error::parse(0, format!("tree `{t}` given twice")));
            }
            a.set(t, R::parse(ctx, &scalar_text(val)?)?)?;
        }
    }
    Ok(a)
}

pub fn ideal_to_json(ideal: &HopfIdealSpec) -> Value {
    let mut out = Map::new();
    out.insert("hopf".into(), Value::String(ideal.kind().to_string()));
    out.insert(
        "generators".into(),
        Value::Array(ideal.generators().iter().map(graded_vector_to_json).collect()),
    );
    Value::Object(out)
}

pub fn ideal_from_json(v: &Value, default_kind: HopfKind) -> Result<HopfIdealSpec> {
    let obj = object(v, "ideal spec")?;
    let kind = string_field(obj, "hopf")?
        .map(str::parse)
        .transpose()?
        .unwrap_or(default_kind);
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(0, "ideal spec needs a `generators` array"))?;
    let gens = gens
        .iter()
        .map(|g| graded_vector_from_json(g, kind))
        .collect::<Result<Vec<_>>>()?;
    HopfIdealSpec::new(kind, gens)
}

pub fn curve_to_json<R: Ring>(curve: &FunctionalCurve<R>) -> Value {
    let coeffs = curve
        .coefficients()
        .iter()
        .map(|c| functional_to_json(c.functional()))
        .collect();
    let mut out = Map::new();
    out.insert("coeffs".into(), Value::Array(coeffs));
    Value::Object(out)
}

pub fn curve_from_json<R: Ring>(
    v: &Value,
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
) -> Result<FunctionalCurve<R>> {
    let coeffs = object(v, "curve")?
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(0, "curve needs a `coeffs` array"))?;
    let coeffs = coeffs
        .iter()
        .map(|c| functional_from_json(c, hopf, ctx))
        .collect::<Result<Vec<_>>>()?;
    FunctionalCurve::from_functionals(coeffs)
}

/// Header of the first coefficient of a curve document, if any.
pub fn curve_header(v: &Value) -> Result<Header> {
    let coeffs = object(v, "curve")?
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(0, "curve needs a `coeffs` array"))?;
    coeffs
        .iter()
        .try_fold(Header::default(), |h, c| h.merge(Header::read(c)?))
}
