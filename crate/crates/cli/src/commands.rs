use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use chargroup::characters::{
    char_exp, char_inv, char_log, char_mul, lie_bracket, Character, InfinitesimalCharacter,
};
use chargroup::evolution::{evol, evolve};
use chargroup::hopf::{
    ck_antipode, ck_coproduct, tensor_antipode, tensor_coproduct, BasisElement, HopfKind,
    HopfStructure,
};
use chargroup::ideals::{annihilates_functional, symplectic_pairs, symplectic_violation};
use chargroup::json::{self, Header};
use chargroup::ring::{parse_rational, Rational, Ring, RingKind, TruncatedSeries};
use chargroup::trees::enumerate_trees;
use chargroup::functional::TruncatedFunctional;
use num_traits::One;
use serde_json::{json, Value};

use crate::{CharOp, Format, Which};

const DEFAULT_TRUNCATION: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] chargroup::Error),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for mathematical domain errors, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_domain() => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Rendered result and exit status.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Global flags as given on the command line; `None` means "not given".
pub struct Config {
    pub truncation: Option<usize>,
    pub hopf: Option<String>,
    pub ring: Option<String>,
}

impl Config {
    fn header(&self) -> CliResult<Header> {
        if self.truncation == Some(0) {
            return Err(CliError::Usage("truncation must be at least 1".into()));
        }
        Ok(Header {
            hopf: self.hopf.as_deref().map(str::parse).transpose()?,
            ring: self.ring.as_deref().map(str::parse).transpose()?,
            truncation: self.truncation,
        })
    }

    /// Flags and file headers must agree wherever both are present.
    fn resolve(&self, files: Header) -> CliResult<(HopfKind, RingKind, usize)> {
        let h = self.header()?.merge(files)?;
        let n = h.truncation.unwrap_or(DEFAULT_TRUNCATION);
        if n == 0 {
            return Err(CliError::Usage("truncation must be at least 1".into()));
        }
        Ok((
            h.hopf.unwrap_or(HopfKind::ConnesKreimer),
            h.ring.unwrap_or(RingKind::Rational),
            n,
        ))
    }
}

fn load(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    Ok(json::parse(&text)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

pub fn trees(max_order: usize, format: Format) -> CliResult<Output> {
    let by_order = enumerate_trees(max_order)?;
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for (k, trees) in by_order.iter().enumerate() {
                s += &format!("order {}: {} trees\n", k + 1, trees.len());
                for t in trees {
                    s += &format!("  {t}\n");
                }
            }
            s
        }
        Format::Json => pretty(&json!({
            "orders": by_order.iter().enumerate().map(|(k, trees)| json!({
                "order": k + 1,
                "count": trees.len(),
                "trees": trees.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })).collect::<Vec<_>>()
        })),
    };
    Ok(Output::ok(text))
}

pub fn structure(config: &Config, element: &str, which: Which, format: Format) -> CliResult<Output> {
    let header = config.header()?;
    let kind = header.hopf.unwrap_or(HopfKind::ConnesKreimer);
    let b = kind.parse_basis(element)?;
    if let Some(n) = header.truncation {
        if b.degree() > n {
            return Err(chargroup::Error::TruncationOverflow { degree: b.degree(), truncation: n }.into());
        }
    }
    let text = match which {
        Which::Coproduct => {
            let raw: Vec<(i64, BasisElement, BasisElement)> = match &b {
                BasisElement::Forest(f) => ck_coproduct(f)
                    .into_iter()
                    .map(|(c, l, r)| (c, l.into(), r.into()))
                    .collect(),
                BasisElement::Word(w) => tensor_coproduct(w)
                    .into_iter()
                    .map(|(c, l, r)| (c, l.into(), r.into()))
                    .collect(),
            };
            let mut terms: BTreeMap<(BasisElement, BasisElement), i64> = BTreeMap::new();
            for (c, l, r) in raw {
                *terms.entry((l, r)).or_insert(0) += c;
            }
            terms.retain(|_, c| *c != 0);
            match format {
                Format::Text => terms
                    .iter()
                    .map(|((l, r), c)| match c {
                        1 => format!("{l} ⊗ {r}\n"),
                        -1 => format!("-{l} ⊗ {r}\n"),
                        c => format!("{c}*{l} ⊗ {r}\n"),
                    })
                    .collect(),
                Format::Json => pretty(&json!({
                    "element": b.to_string(),
                    "coproduct": terms
                        .iter()
                        .map(|((l, r), c)| json!([c.to_string(), l.to_string(), r.to_string()]))
                        .collect::<Vec<_>>(),
                })),
            }
        }
        Which::Antipode => {
            let v = match &b {
                BasisElement::Forest(f) => ck_antipode(f),
                BasisElement::Word(w) => tensor_antipode(w),
            };
            match format {
                Format::Text => v.to_string(),
                Format::Json => pretty(&json!({
                    "element": b.to_string(),
                    "antipode": json::graded_vector_to_json(&v),
                })),
            }
        }
    };
    Ok(Output::ok(text))
}

fn render<R: Ring>(phi: &TruncatedFunctional<R>, format: Format) -> String {
    match format {
        Format::Text => phi.to_string(),
        Format::Json => pretty(&json::functional_to_json(phi)),
    }
}

pub fn char_op(config: &Config, op: &CharOp, format: Format) -> CliResult<Output> {
    match op {
        CharOp::Symplectic { input } => {
            let doc = load(input)?;
            let is_tree_map = doc.get("trees").is_some();
            let header = if is_tree_map {
                Header {
                    truncation: doc.get("truncation").and_then(Value::as_u64).map(|n| n as usize),
                    ..Header::default()
                }
            } else {
                Header::read(&doc)?
            };
            let (kind, ring, n) = config.resolve(header)?;
            match ring {
                RingKind::Rational => symplectic::<Rational>(&(), kind, n, &doc, is_tree_map, format),
                RingKind::Series(m) => symplectic::<TruncatedSeries>(&m, kind, n, &doc, is_tree_map, format),
            }
        }
        CharOp::Evolve { curve, time } => {
            let doc = load(curve)?;
            let (kind, ring, n) = config.resolve(json::curve_header(&doc)?)?;
            let hopf = HopfStructure::new(kind, n)?;
            let t = parse_rational(time)?;
            let text = match ring {
                RingKind::Rational => render(&run_evolve::<Rational>(&hopf, &(), &doc, &t)?, format),
                RingKind::Series(m) => render(&run_evolve::<TruncatedSeries>(&hopf, &m, &doc, &t)?, format),
            };
            Ok(Output::ok(text))
        }
        _ => {
            let paths = match op {
                CharOp::Mul { left, right } | CharOp::Bracket { left, right } => vec![left, right],
                CharOp::Inv { input } | CharOp::Exp { input } | CharOp::Log { input } => vec![input],
                CharOp::Evolve { .. } | CharOp::Symplectic { .. } => unreachable!(),
            };
            let docs = paths.into_iter().map(|p| load(p)).collect::<CliResult<Vec<_>>>()?;
            let files = docs
                .iter()
                .try_fold(Header::default(), |h, d| h.merge(Header::read(d)?))?;
            let (kind, ring, n) = config.resolve(files)?;
            let hopf = HopfStructure::new(kind, n)?;
            let text = match ring {
                RingKind::Rational => render(&group_op::<Rational>(&hopf, &(), op, &docs)?, format),
                RingKind::Series(m) => render(&group_op::<TruncatedSeries>(&hopf, &m, op, &docs)?, format),
            };
            Ok(Output::ok(text))
        }
    }
}

fn group_op<R: Ring>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    op: &CharOp,
    docs: &[Value],
) -> CliResult<TruncatedFunctional<R>> {
    let read = |i: usize| json::functional_from_json::<R>(&docs[i], hopf, ctx);
    let character = |i: usize| -> CliResult<Character<R>> { Ok(Character::new(read(i)?)?) };
    let infinitesimal =
        |i: usize| -> CliResult<InfinitesimalCharacter<R>> { Ok(InfinitesimalCharacter::new(read(i)?)?) };
    Ok(match op {
        CharOp::Mul { .. } => char_mul(&character(0)?, &character(1)?)?.into_functional(),
        CharOp::Inv { .. } => char_inv(&character(0)?).into_functional(),
        CharOp::Exp { .. } => char_exp(&infinitesimal(0)?)?.into_functional(),
        CharOp::Log { .. } => char_log(&character(0)?)?.into_functional(),
        CharOp::Bracket { .. } => lie_bracket(&infinitesimal(0)?, &infinitesimal(1)?)?.into_functional(),
        CharOp::Evolve { .. } | CharOp::Symplectic { .. } => unreachable!(),
    })
}

fn run_evolve<R: Ring>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    doc: &Value,
    t: &num_rational::BigRational,
) -> CliResult<TruncatedFunctional<R>> {
    let curve = json::curve_from_json::<R>(doc, hopf, ctx)?;
    if t.is_one() {
        Ok(evol(&curve)?.into_functional())
    } else {
        Ok(evolve(&curve, t)?)
    }
}

fn symplectic<R: Ring>(
    ctx: &R::Context,
    kind: HopfKind,
    n: usize,
    doc: &Value,
    is_tree_map: bool,
    format: Format,
) -> CliResult<Output> {
    if kind != HopfKind::ConnesKreimer {
        return Err(chargroup::Error::Incompatible(format!("symplectic tree maps live on ck, not {kind}")).into());
    }
    let generators = symplectic_pairs(n)?.len();
    let violation: Option<String> = if is_tree_map {
        let a = json::tree_values_from_json::<R>(doc, ctx, n)?;
        symplectic_violation(&a)?.map(|(t, u)| format!("a({t}∘{u}) + a({u}∘{t}) ≠ a({t})·a({u})"))
    } else if generators == 0 {
        None
    } else {
        let hopf = HopfStructure::new(kind, n)?;
        let phi = json::functional_from_json::<R>(doc, &hopf, ctx)?;
        let ideal = chargroup::ideals::symplectic_generators(n)?;
        annihilates_functional(&phi, &ideal)?.map(|v| format!("value {} on generator {}", v.value, v.generator))
    };
    let ok = violation.is_none();
    let text = match format {
        Format::Text => match &violation {
            None => format!("true ({generators} generators)"),
            Some(v) => format!("false ({generators} generators): {v}"),
        },
        Format::Json => {
            let mut v = json!({ "symplectic": ok, "generators": generators });
            if let Some(msg) = violation {
                v["violation"] = Value::String(msg);
            }
            pretty(&v)
        }
    };
    Ok(Output {
        text,
        code: if ok { 0 } else { 2 },
    })
}
