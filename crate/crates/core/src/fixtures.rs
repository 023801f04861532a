//! Reference matrices and tables shipped with the crate, and diff reports against them.

use std::collections::BTreeMap;

use crate::blade::Blade;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::representation::{anticommutator_witness, blade_matrix, Representation, RingMatrix, RingTag};
use crate::scalars::{Ring, RingScalar};
use crate::signature::Signature;

const SPINOR_TEXT: &str = include_str!("../fixtures/spinor.txt");
const SPACES_TEXT: &str = include_str!("../fixtures/spinor_spaces.txt");
const OCTONION_TEXT: &str = include_str!("../fixtures/octonion.txt");

/// Reference generator matrices for one signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub id: String,
    pub signature: Signature,
    pub ring_tag: RingTag,
    pub generators: BTreeMap<usize, RingMatrix>,
    pub blades: Vec<(Blade, RingMatrix)>,
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn perr(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

enum Target {
    Gen(usize),
    Blade(Blade),
}

enum Pending {
    Dense(Vec<Vec<RingScalar>>),
    Colperm,
}

/// Parse the textual fixture format.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    let mut lines = meaningful_lines(text).peekable();
    while let Some((n, line)) = lines.next() {
        let id = line.strip_prefix("fixture ").ok_or_else(|| perr(n, "expected `fixture <id>`"))?.trim().to_string();
        let (n2, sline) = lines.next().ok_or_else(|| perr(n, "missing signature"))?;
        let nums: Vec<usize> = sline
            .strip_prefix("signature ")
            .ok_or_else(|| perr(n2, "expected `signature p q`"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(n2, "bad signature")))
            .collect::<Result<_>>()?;
        let [p, q] = nums[..] else { return Err(perr(n2, "bad signature")) };
        let signature = Signature::new(p, q)?;
        let (n3, rline) = lines.next().ok_or_else(|| perr(n2, "missing ring"))?;
        let ring_tag = RingTag::from_label(rline.strip_prefix("ring ").ok_or_else(|| perr(n3, "expected `ring`"))?)?;
        let ring = ring_tag.entry_ring();
        let mut generators = BTreeMap::new();
        let mut blades = Vec::new();
        loop {
            let (hn, head) = lines.next().ok_or_else(|| perr(n, format!("fixture {id} is not terminated")))?;
            if head == "end" {
                break;
            }
            let words: Vec<&str> = head.split_whitespace().collect();
            let index = |t: &str| t.parse::<usize>().map_err(|_| perr(hn, "bad generator index"));
            let (target, mode) = match words.as_slice() {
                ["gen", i] => (Target::Gen(index(i)?), Pending::Dense(vec![])),
                ["gen", i, "colperm"] => (Target::Gen(index(i)?), Pending::Colperm),
                ["blade", b] => {
                    let blade = format!("g{b}").parse::<Blade>().map_err(|e| perr(hn, e))?;
                    (Target::Blade(blade), Pending::Dense(vec![]))
                }
                _ => return Err(perr(hn, format!("unexpected `{head}`"))),
            };
            let matrix = match mode {
                Pending::Colperm => {
                    let (ln, row) = lines.next().ok_or_else(|| perr(hn, "missing colperm row"))?;
                    colperm_matrix(ln, row)?
                }
                Pending::Dense(mut rows) => {
                    loop {
                        let (ln, row) = *lines.peek().ok_or_else(|| perr(hn, "missing matrix rows"))?;
                        if row == "end" || row.starts_with("gen ") || row.starts_with("blade ") {
                            break;
                        }
                        lines.next();
                        let entries = row
                            .split_whitespace()
                            .map(|e| RingScalar::parse(ring, e).map_err(|err| perr(ln, err)))
                            .collect::<Result<Vec<_>>>()?;
                        rows.push(entries);
                    }
                    RingMatrix::from_rows(ring, rows)?
                }
            };
            match target {
                Target::Gen(i) => {
                    generators.insert(i, matrix);
                }
                Target::Blade(b) => blades.push((b, matrix)),
            }
        }
        out.push(Fixture { id, signature, ring_tag, generators, blades });
    }
    Ok(out)
}

fn colperm_matrix(line: usize, row: &str) -> Result<RingMatrix> {
    let targets: Vec<i64> =
        row.split_whitespace().map(|t| t.parse::<i64>().map_err(|_| perr(line, "bad colperm entry"))).collect::<Result<_>>()?;
    let dim = targets.len();
    let mut m = RingMatrix::zero(Ring::Real, dim);
    for (c, &t) in targets.iter().enumerate() {
        let r = t.unsigned_abs() as usize;
        if r == 0 || r > dim {
            return Err(perr(line, format!("row {t} out of range")));
        }
        m.set(r - 1, c, RingScalar::Real(Dyadic::from_int(t.signum())))?;
    }
    Ok(m)
}

/// All shipped spinor fixtures.
pub fn all_fixtures() -> Vec<Fixture> {
    parse_fixtures(SPINOR_TEXT).expect("shipped fixtures parse")
}

/// The shipped fixture with the given id, such as `cl-1-3`.
pub fn fixture(id: &str) -> Result<Fixture> {
    all_fixtures().into_iter().find(|f| f.id == id).ok_or_else(|| Error::UnknownFixture(id.to_string()))
}

/// Fixture id for a signature.
pub fn fixture_id(sig: Signature) -> String {
    format!("cl-{}-{}", sig.p(), sig.q())
}

/// The shipped fixture for a signature, if one exists.
pub fn fixture_for(sig: Signature) -> Option<Fixture> {
    fixture(&fixture_id(sig)).ok()
}

/// Published spinor-space labels, as `(signature, label)` pairs.
pub fn spinor_space_table() -> Vec<(Signature, String)> {
    meaningful_lines(SPACES_TEXT)
        .map(|(_, l)| {
            let w: Vec<&str> = l.split_whitespace().collect();
            let p = w[0].parse().expect("shipped table parses");
            let q = w[1].parse().expect("shipped table parses");
            (Signature::new(p, q).expect("small signature"), w[2].to_string())
        })
        .collect()
}

/// Raw octonion reference text.
pub fn octonion_text() -> &'static str {
    OCTONION_TEXT
}

/// How one generated matrix compares with its reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffStatus {
    Exact,
    /// The reference is the negative of the generated matrix.
    SignFlip,
    /// Entries that differ, as `(row, column, reference, generated)` with zero-based positions.
    Mismatch(Vec<(usize, usize, String, String)>),
    ShapeMismatch { reference: (Ring, usize), generated: (Ring, usize) },
}

/// One compared matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDiff {
    pub label: String,
    pub status: DiffStatus,
}

/// Entrywise comparison of a representation with a reference fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub id: String,
    pub signature: Signature,
    pub diffs: Vec<MatrixDiff>,
    /// First failing pair when the reference matrices themselves break the relations.
    pub reference_witness: Option<(usize, usize)>,
    pub generated_witness: Option<(usize, usize)>,
}

impl FixtureReport {
    pub fn exact_count(&self) -> usize {
        self.diffs.iter().filter(|d| d.status == DiffStatus::Exact).count()
    }

    pub fn all_exact(&self) -> bool {
        self.exact_count() == self.diffs.len()
    }

    /// The generated matrices are valid but differ from the reference.
    pub fn reference_discrepancy(&self) -> bool {
        !self.all_exact() && self.generated_witness.is_none()
    }

    pub fn reference_satisfies_relations(&self) -> bool {
        self.reference_witness.is_none()
    }

    /// One line per compared matrix.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut out = vec![format!(
            "{} {}: {}/{} exact, reference relations {}, generated relations {}",
            self.id,
            self.signature,
            self.exact_count(),
            self.diffs.len(),
            match self.reference_witness {
                None => "hold".to_string(),
                Some((i, j)) => format!("fail at ({i},{j})"),
            },
            match self.generated_witness {
                None => "hold".to_string(),
                Some((i, j)) => format!("fail at ({i},{j})"),
            },
        )];
        for d in &self.diffs {
            let s = match &d.status {
                DiffStatus::Exact => "exact".to_string(),
                DiffStatus::SignFlip => "sign flip".to_string(),
                DiffStatus::Mismatch(e) => {
                    let first: Vec<String> = e
                        .iter()
                        .take(4)
                        .map(|(r, c, want, got)| format!("[{},{}] reference {want} generated {got}", r + 1, c + 1))
                        .collect();
                    format!("{} entries differ: {}", e.len(), first.join("; "))
                }
                DiffStatus::ShapeMismatch { reference, generated } => {
                    format!("shape differs: reference {reference:?} generated {generated:?}")
                }
            };
            out.push(format!("  {}: {s}", d.label));
        }
        if self.reference_discrepancy() {
            out.push("  verdict: reference discrepancy (generated matrices satisfy the relations)".into());
        }
        out
    }
}

fn diff(label: String, reference: &RingMatrix, generated: &RingMatrix) -> MatrixDiff {
    let status = if reference.ring() != generated.ring() || reference.dim() != generated.dim() {
        DiffStatus::ShapeMismatch {
            reference: (reference.ring(), reference.dim()),
            generated: (generated.ring(), generated.dim()),
        }
    } else if reference == generated {
        DiffStatus::Exact
    } else if *reference == generated.neg() {
        DiffStatus::SignFlip
    } else {
        let mut entries = Vec::new();
        for r in 0..reference.dim() {
            for c in 0..reference.dim() {
                let (a, b) = (reference.get(r, c), generated.get(r, c));
                if a != b {
                    entries.push((r, c, a.to_text(), b.to_text()));
                }
            }
        }
        DiffStatus::Mismatch(entries)
    };
    MatrixDiff { label, status }
}

/// Compare a representation with the named fixture.
pub fn compare_to_fixture(rep: &Representation, id: &str) -> Result<FixtureReport> {
    let fx = fixture(id)?;
    if fx.signature != rep.signature {
        return Err(Error::SignatureMismatch { left: fx.signature, right: rep.signature });
    }
    let mut diffs = Vec::new();
    for (&i, m) in &fx.generators {
        let g = rep.matrices.get(i - 1).ok_or(Error::IndexOutOfRange { index: i, n: rep.matrices.len() })?;
        diffs.push(diff(format!("gamma{i}"), m, g));
    }
    for (b, m) in &fx.blades {
        let g = blade_matrix(&rep.matrices, rep.entry_ring(), rep.dim(), *b)?;
        diffs.push(diff(format!("blade {b}"), m, &g));
    }
    let reference_witness = if fx.generators.len() == rep.signature.n() {
        let mats: Vec<RingMatrix> = fx.generators.values().cloned().collect();
        anticommutator_witness(rep.signature, &mats)?
    } else {
        None
    };
    let generated_witness = anticommutator_witness(rep.signature, &rep.matrices)?;
    Ok(FixtureReport { id: fx.id, signature: fx.signature, diffs, reference_witness, generated_witness })
}
