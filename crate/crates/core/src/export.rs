//! JSON, plain-text and LaTeX renderings of a representation.

use serde_json::{json, Map, Value};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::representation::{Representation, RingMatrix};
use crate::scalars::{Ring, RingScalar};
use crate::spinor::SpinorBasis;

/// Version tag written into every JSON document.
pub const SCHEMA: &str = "cliffgen/1";

/// Output formats understood by [`render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Latex,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

pub fn render(rep: &Representation, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(rep)).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => to_text(rep),
        Format::Latex => to_latex(rep),
    }
}

fn real_json(x: &Dyadic) -> Value {
    Value::String(x.to_pow2_text())
}

/// Reals as strings `num/2^e`, complex as `[re, im]`, quaternions as `[a, b, c, d]`.
pub fn entry_json(e: &RingScalar) -> Value {
    let c = e.components();
    match e.ring() {
        Ring::Real => real_json(&c[0]),
        Ring::Complex => Value::Array(c[..2].iter().map(real_json).collect()),
        Ring::Quaternion => Value::Array(c.iter().map(real_json).collect()),
    }
}

pub fn matrix_json(m: &RingMatrix) -> Value {
    Value::Array(m.rows().map(|r| Value::Array(r.iter().map(entry_json).collect())).collect())
}

fn entry_from_json(ring: Ring, v: &Value) -> Result<RingScalar> {
    let bad = || Error::Parse(format!("bad matrix entry {v}"));
    let parse = |x: &Value| x.as_str().ok_or_else(bad)?.parse::<Dyadic>();
    let comps: Vec<Dyadic> = match (ring, v) {
        (Ring::Real, Value::String(_)) => vec![parse(v)?],
        (_, Value::Array(xs)) if xs.len() == ring.real_dim() && ring != Ring::Real => {
            xs.iter().map(parse).collect::<Result<_>>()?
        }
        _ => return Err(bad()),
    };
    RingScalar::from_components(ring, &comps)
}

/// Reads a matrix written by [`matrix_json`].
pub fn matrix_from_json(ring: Ring, v: &Value) -> Result<RingMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("matrix is not an array".into()))?;
    let rows: Vec<Vec<RingScalar>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("matrix row is not an array".into()))?
                .iter()
                .map(|e| entry_from_json(ring, e))
                .collect()
        })
        .collect::<Result<_>>()?;
    RingMatrix::from_rows(ring, rows)
}

fn basis_labels(b: &SpinorBasis) -> Vec<String> {
    b.module_blades.iter().map(ToString::to_string).collect()
}

fn units_json(b: &SpinorBasis) -> Value {
    let mut m = Map::new();
    for u in &b.units {
        m.insert(u.name.to_string(), Value::String(u.label()));
    }
    Value::Object(m)
}

fn generators_json(ms: &[RingMatrix]) -> Value {
    Value::Array(
        ms.iter()
            .enumerate()
            .map(|(i, m)| json!({ "index": i + 1, "matrix": matrix_json(m) }))
            .collect(),
    )
}

pub fn to_json(rep: &Representation) -> Value {
    let b = &rep.basis;
    let mut doc = json!({
        "schema": SCHEMA,
        "signature": [rep.signature.p(), rep.signature.q()],
        "ring": rep.class.ring_tag.label(),
        "dim": rep.dim(),
        "k": b.idempotent.k(),
        "generating_set": b.idempotent.source.members.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "idempotent": b.f.to_text(),
        "basis": basis_labels(b),
        "scalar_units": units_json(b),
        "generators": generators_json(&rep.matrices),
    });
    if let Some(h) = &rep.hat {
        doc["hat"] = json!({
            "idempotent": h.basis.f.to_text(),
            "basis": basis_labels(&h.basis),
            "scalar_units": units_json(&h.basis),
            "generators": generators_json(&h.matrices),
        });
    }
    doc
}

fn matrix_text(m: &RingMatrix) -> String {
    let cells: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(RingScalar::to_text).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        s.push_str("  ");
        s.push_str(&padded.join(" "));
        s.push('\n');
    }
    s
}

fn half_text(out: &mut String, label: &str, basis: &SpinorBasis, ms: &[RingMatrix]) {
    out.push_str(&format!("{label}idempotent: {}\n", basis.f));
    out.push_str(&format!("{label}basis: {}\n", basis_labels(basis).join(" ")));
    for u in &basis.units {
        out.push_str(&format!("{label}unit {}: {}\n", u.name, u.label()));
    }
    for (i, m) in ms.iter().enumerate() {
        out.push_str(&format!("{label}gamma{}:\n", i + 1));
        out.push_str(&matrix_text(m));
    }
}

pub fn to_text(rep: &Representation) -> String {
    let b = &rep.basis;
    let members: Vec<String> = b.idempotent.source.members.iter().map(ToString::to_string).collect();
    let mut out = format!(
        "signature: {}\nring: {}\ndim: {}\nspinor space: {}\nk: {}\ngenerating set: {}\n",
        rep.signature,
        rep.class.ring_tag,
        rep.dim(),
        rep.class.spinor_space(),
        b.idempotent.k(),
        if members.is_empty() { "(empty)".to_string() } else { members.join(" ") },
    );
    half_text(&mut out, "", b, &rep.matrices);
    if let Some(h) = &rep.hat {
        half_text(&mut out, "hat ", &h.basis, &h.matrices);
    }
    out
}

fn latex_entry(e: &RingScalar) -> String {
    let t = e.to_text();
    if t.contains('/') {
        let d: Vec<String> = e.components().iter().map(|x| x.to_string()).collect();
        format!("\\text{{{}}}", d.join(","))
    } else {
        t
    }
}

fn latex_matrix(m: &RingMatrix) -> String {
    let rows: Vec<String> =
        m.rows().map(|r| r.iter().map(latex_entry).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{bmatrix}}\n{}\n\\end{{bmatrix}}", rows.join(" \\\\\n"))
}

pub fn to_latex(rep: &Representation) -> String {
    let mut out = format!(
        "% Cl_{{{},{}}} over {}, dim {}\n",
        rep.signature.p(),
        rep.signature.q(),
        rep.class.ring_tag,
        rep.dim()
    );
    let mut emit = |hat: bool, ms: &[RingMatrix]| {
        for (i, m) in ms.iter().enumerate() {
            let name = if hat { format!("\\hat{{\\gamma}}_{{{}}}", i + 1) } else { format!("\\gamma_{{{}}}", i + 1) };
            out.push_str(&format!("$$ {name} = {} $$\n", latex_matrix(m)));
        }
    };
    emit(false, &rep.matrices);
    if let Some(h) = &rep.hat {
        emit(true, &h.matrices);
    }
    out
}
