//! Octonions and split octonions as pairs of exact quaternions.
//!
//! The product of `q + r·ε` and `s + t·ε` is
//! `(q s ∓ t̄ r) + (t q + r s̄)·ε`, with the minus sign for octonions
//! (`ε² = -1`) and the plus sign for split octonions (`ε² = +1`).

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::random;
use crate::real_matrix::RealMatrix;
use crate::scalars::{quat_conj, quat_mul, quat_norm_sq, ExactComplex, ExactQuaternion};

/// A ring with an anti-involution, the input of one doubling step.
pub trait StarAlgebra: Clone + PartialEq + fmt::Debug {
    fn additive_identity() -> Self;
    fn unit() -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn star(&self) -> Self;
}

impl StarAlgebra for Dyadic {
    fn additive_identity() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn star(&self) -> Self {
        self.clone()
    }
}

impl StarAlgebra for ExactComplex {
    fn additive_identity() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn minus(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn times(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn star(&self) -> Self {
        ExactComplex::conj(self)
    }
}

impl StarAlgebra for ExactQuaternion {
    fn additive_identity() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn minus(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn times(&self, o: &Self) -> Self {
        quat_mul(self, o)
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn star(&self) -> Self {
        quat_conj(self)
    }
}

/// One doubling step: `(q, r)(s, t) = (q s + sign·t̄ r, t q + r s̄)`.
///
/// `eps_sq` is the square of the new unit and is `-1` or `+1`.
pub fn double_product<T: StarAlgebra>(q: &T, r: &T, s: &T, t: &T, eps_sq: i8) -> (T, T) {
    let cross = t.star().times(r);
    let first = if eps_sq < 0 { q.times(s).minus(&cross) } else { q.times(s).plus(&cross) };
    (first, t.times(q).plus(&r.times(&s.star())))
}

/// The doubled algebra `T ⊕ T·ε` with `ε² = -1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Doubled<T> {
    pub a: T,
    pub b: T,
}

impl<T: StarAlgebra> Doubled<T> {
    pub fn new(a: T, b: T) -> Self {
        Doubled { a, b }
    }
}

impl<T: StarAlgebra> StarAlgebra for Doubled<T> {
    fn additive_identity() -> Self {
        Doubled::new(T::additive_identity(), T::additive_identity())
    }
    fn unit() -> Self {
        Doubled::new(T::unit(), T::additive_identity())
    }
    fn plus(&self, o: &Self) -> Self {
        Doubled::new(self.a.plus(&o.a), self.b.plus(&o.b))
    }
    fn minus(&self, o: &Self) -> Self {
        Doubled::new(self.a.minus(&o.a), self.b.minus(&o.b))
    }
    fn times(&self, o: &Self) -> Self {
        let (a, b) = double_product(&self.a, &self.b, &o.a, &o.b, -1);
        Doubled::new(a, b)
    }
    fn negate(&self) -> Self {
        Doubled::new(self.a.negate(), self.b.negate())
    }
    fn star(&self) -> Self {
        Doubled::new(self.a.star(), self.b.negate())
    }
}

/// Basis labels for octonions in the order used by matrices and tables.
pub const OCTONION_NAMES: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];
/// Basis labels for split octonions.
pub const SPLIT_NAMES: [&str; 8] = ["1", "i", "j", "k", "e", "ie", "je", "ke"];

pub fn basis_names(split: bool) -> &'static [&'static str; 8] {
    if split {
        &SPLIT_NAMES
    } else {
        &OCTONION_NAMES
    }
}

/// `a + b·ε` with quaternion parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Octonion {
    pub a: ExactQuaternion,
    pub b: ExactQuaternion,
    pub split: bool,
}

impl Octonion {
    pub fn new(a: ExactQuaternion, b: ExactQuaternion, split: bool) -> Self {
        Octonion { a, b, split }
    }

    pub fn zero(split: bool) -> Self {
        Octonion::new(ExactQuaternion::zero(), ExactQuaternion::zero(), split)
    }

    pub fn one(split: bool) -> Self {
        Octonion::new(ExactQuaternion::one(), ExactQuaternion::zero(), split)
    }

    /// Basis element `m` in `0..8`: `1, i, j, k` then `ε` times those.
    pub fn unit(m: usize, split: bool) -> Self {
        assert!(m < 8, "octonion basis index {m} out of range");
        let mut c = [0i64; 8];
        c[m] = 1;
        Octonion::from_ints(c, split)
    }

    pub fn from_ints(c: [i64; 8], split: bool) -> Self {
        Octonion::from_components(c.map(Dyadic::from_int), split)
    }

    pub fn from_components(c: [Dyadic; 8], split: bool) -> Self {
        let [a0, a1, a2, a3, b0, b1, b2, b3] = c;
        Octonion::new(ExactQuaternion::new(a0, a1, a2, a3), ExactQuaternion::new(b0, b1, b2, b3), split)
    }

    pub fn components(&self) -> [Dyadic; 8] {
        let [a0, a1, a2, a3] = self.a.components();
        let [b0, b1, b2, b3] = self.b.components();
        [a0, a1, a2, a3, b0, b1, b2, b3].map(Clone::clone)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        Octonion::new(-self.a.clone(), -self.b.clone(), self.split)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        check_flags(self, o)?;
        Ok(Octonion::new(self.a.clone() + o.a.clone(), self.b.clone() + o.b.clone(), self.split))
    }

    pub fn scale(&self, s: &Dyadic) -> Self {
        Octonion::new(self.a.scale(s), self.b.scale(s), self.split)
    }

    /// `±basis` when the value is a signed basis element.
    pub fn as_signed_unit(&self) -> Option<(i8, usize)> {
        let c = self.components();
        let mut nz = c.iter().enumerate().filter(|(_, x)| !x.is_zero());
        let (m, x) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        if x.is_one() {
            Some((1, m))
        } else if (-x).is_one() {
            Some((-1, m))
        } else {
            None
        }
    }

    /// Text such as `kl`, `-1`, or `1/2 + i - 3 kl`.
    pub fn to_text(&self) -> String {
        let names = basis_names(self.split);
        let mut out = String::new();
        for (m, c) in self.components().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (m, mag.is_one()) {
                (0, _) => out.push_str(&mag.to_string()),
                (_, true) => out.push_str(names[m]),
                _ => out.push_str(&format!("{mag} {}", names[m])),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_flags(x: &Octonion, y: &Octonion) -> Result<()> {
    if x.split == y.split {
        Ok(())
    } else {
        Err(Error::SplitMismatch)
    }
}

/// The doubled product of two octonions of the same flavour.
pub fn cd_multiply(x: &Octonion, y: &Octonion) -> Result<Octonion> {
    check_flags(x, y)?;
    let eps_sq = if x.split { 1 } else { -1 };
    let (a, b) = double_product(&x.a, &x.b, &y.a, &y.b, eps_sq);
    Ok(Octonion::new(a, b, x.split))
}

/// `conj(a + bε) = conj(a) - bε`.
pub fn oct_conj(x: &Octonion) -> Octonion {
    Octonion::new(quat_conj(&x.a), -x.b.clone(), x.split)
}

/// `|a|² + |b|²` for octonions, `|a|² - |b|²` for split octonions.
pub fn oct_norm(x: &Octonion) -> Dyadic {
    let (na, nb) = (quat_norm_sq(&x.a), quat_norm_sq(&x.b));
    if x.split {
        na - nb
    } else {
        na + nb
    }
}

pub fn oct_inverse(x: &Octonion) -> Result<Octonion> {
    let n = oct_norm(x);
    if n.is_zero() {
        return Err(Error::NotInvertible(format!("{x} has zero norm")));
    }
    Ok(oct_conj(x).scale(&Dyadic::one().checked_div(&n)?))
}

/// Matrix of `y ↦ x·y` in the basis `1, i, j, k, ε, iε, jε, kε`.
pub fn left_mult_matrix(x: &Octonion) -> RealMatrix {
    let mut m = RealMatrix::zeros(8, 8);
    for col in 0..8 {
        let img = cd_multiply(x, &Octonion::unit(col, x.split)).expect("same flavour");
        for (row, c) in img.components().into_iter().enumerate() {
            m.set(row, col, c);
        }
    }
    m
}

/// Products of the seven imaginary units: cell `[r][c]` is `e_{r+1} · e_{c+1}`.
pub fn cayley_table(split: bool) -> Vec<Vec<Octonion>> {
    (1..8)
        .map(|r| {
            (1..8)
                .map(|c| cd_multiply(&Octonion::unit(r, split), &Octonion::unit(c, split)).expect("same flavour"))
                .collect()
        })
        .collect()
}

/// Name of a signed basis element, e.g. `-kl`.
pub fn signed_unit_text(sign: i8, m: usize, split: bool) -> String {
    let name = basis_names(split)[m];
    if sign < 0 {
        format!("-{name}")
    } else {
        name.to_string()
    }
}

/// Parses a signed basis name such as `-jl` or `1`.
pub fn parse_signed_unit(s: &str, split: bool) -> Result<(i8, usize)> {
    let (sign, name) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    basis_names(split)
        .iter()
        .position(|n| *n == name)
        .map(|m| (sign, m))
        .ok_or_else(|| Error::Parse(format!("unknown octonion unit '{s}'")))
}

/// Evaluates an expression of basis names, `*`, `-` and parentheses, e.g. `(i*j)*l`.
///
/// Products associate to the left, so the grouping is always explicit where it matters.
pub fn eval_expression(expr: &str, split: bool) -> Result<Octonion> {
    let tokens = tokenize(expr)?;
    let mut pos = 0;
    let v = parse_product(&tokens, &mut pos, split)?;
    if pos != tokens.len() {
        return Err(Error::Parse(format!("unexpected '{}' in '{expr}'", tokens[pos])));
    }
    Ok(v)
}

fn tokenize(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if "()*-".contains(c) {
            out.push(c.to_string());
            chars.next();
        } else if c.is_ascii_alphanumeric() {
            let mut word = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() {
                    word.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(word);
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' in '{s}'")));
        }
    }
    Ok(out)
}

fn parse_product(t: &[String], pos: &mut usize, split: bool) -> Result<Octonion> {
    let mut acc = parse_factor(t, pos, split)?;
    while t.get(*pos).map(String::as_str) == Some("*") {
        *pos += 1;
        let rhs = parse_factor(t, pos, split)?;
        acc = cd_multiply(&acc, &rhs)?;
    }
    Ok(acc)
}

fn parse_factor(t: &[String], pos: &mut usize, split: bool) -> Result<Octonion> {
    let tok = t.get(*pos).ok_or_else(|| Error::Parse("expression ends early".into()))?;
    *pos += 1;
    match tok.as_str() {
        "-" => Ok(parse_factor(t, pos, split)?.neg()),
        "(" => {
            let v = parse_product(t, pos, split)?;
            if t.get(*pos).map(String::as_str) != Some(")") {
                return Err(Error::Parse("missing ')'".into()));
            }
            *pos += 1;
            Ok(v)
        }
        name => {
            let (_, m) = parse_signed_unit(name, split)?;
            Ok(Octonion::unit(m, split))
        }
    }
}

/// Random octonion with small dyadic components.
pub fn random_octonion<R: Rng>(rng: &mut R, split: bool) -> Octonion {
    Octonion::new(random::quaternion(rng), random::quaternion(rng), split)
}

/// Reference Cayley table and left-multiplication matrices for one flavour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctonionReference {
    pub split: bool,
    /// Signed units as `(sign, basis index)`, seven rows of seven.
    pub table: Vec<Vec<(i8, usize)>>,
    /// Left-multiplication matrices keyed by basis index `1..8`.
    pub matrices: Vec<(usize, RealMatrix)>,
}

/// Parses the shipped octonion reference data.
pub fn reference(split: bool) -> Result<OctonionReference> {
    parse_reference(fixtures::octonion_text(), split)
}

pub fn parse_reference(text: &str, split: bool) -> Result<OctonionReference> {
    let flavour = if split { "split" } else { "octonion" };
    let mut table: Vec<Vec<(i8, usize)>> = Vec::new();
    let mut matrices = Vec::new();
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    while let Some(header) = lines.next() {
        let w: Vec<&str> = header.split_whitespace().collect();
        let body: Vec<&str> = lines.by_ref().take_while(|l| *l != "end").collect();
        if w.get(1) != Some(&flavour) {
            continue;
        }
        match w[0] {
            "table" => {
                table = body
                    .iter()
                    .map(|row| row.split_whitespace().map(|c| parse_signed_unit(c, split)).collect())
                    .collect::<Result<_>>()?;
            }
            "matrix" => {
                let name = w.get(2).ok_or_else(|| Error::Parse(format!("matrix header '{header}'")))?;
                let (_, m) = parse_signed_unit(name, split)?;
                let rows: Vec<Vec<Dyadic>> = body
                    .iter()
                    .map(|row| row.split_whitespace().map(str::parse).collect())
                    .collect::<Result<_>>()?;
                matrices.push((m, RealMatrix::from_rows(rows)?));
            }
            other => return Err(Error::Parse(format!("unknown octonion section '{other}'"))),
        }
    }
    if table.len() != 7 || table.iter().any(|r| r.len() != 7) {
        return Err(Error::ShapeMismatch(format!("{flavour} table is not 7x7")));
    }
    Ok(OctonionReference { split, table, matrices })
}

/// A reference table cell that disagrees with the doubling rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: String,
    pub col: String,
    pub reference: String,
    pub computed: String,
    /// Set when the reference row or column repeats a unit up to sign, which no
    /// composition algebra allows since multiplication by a unit is injective.
    pub suspected_typo: bool,
}

/// Comparison of the generated table and matrices with the reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctonionReport {
    pub split: bool,
    pub matching_cells: usize,
    pub mismatches: Vec<CellMismatch>,
    pub matching_matrices: usize,
    pub differing_matrices: Vec<String>,
}

fn repeats_unit(cells: &[(i8, usize)]) -> bool {
    let mut seen = [false; 8];
    cells.iter().any(|&(_, m)| std::mem::replace(&mut seen[m], true))
}

pub fn compare_reference(r: &OctonionReference) -> OctonionReport {
    let split = r.split;
    let names = basis_names(split);
    let generated = cayley_table(split);
    let mut matching = 0;
    let mut mismatches = Vec::new();
    for (ri, row) in r.table.iter().enumerate() {
        for (ci, &(sign, m)) in row.iter().enumerate() {
            let g = &generated[ri][ci];
            if g.as_signed_unit() == Some((sign, m)) {
                matching += 1;
                continue;
            }
            let column: Vec<(i8, usize)> = r.table.iter().map(|row| row[ci]).collect();
            mismatches.push(CellMismatch {
                row: names[ri + 1].to_string(),
                col: names[ci + 1].to_string(),
                reference: signed_unit_text(sign, m, split),
                computed: g.to_text(),
                suspected_typo: repeats_unit(row) || repeats_unit(&column),
            });
        }
    }
    let mut matching_matrices = 0;
    let mut differing = Vec::new();
    for (m, mat) in &r.matrices {
        if left_mult_matrix(&Octonion::unit(*m, split)) == *mat {
            matching_matrices += 1;
        } else {
            differing.push(names[*m].to_string());
        }
    }
    OctonionReport { split, matching_cells: matching, mismatches, matching_matrices, differing_matrices: differing }
}

/// Counts pairs with `N(xy) = N(x)N(y)` among `pairs` seeded random pairs.
pub fn norm_multiplicativity(pairs: usize, seed: u64, split: bool) -> usize {
    let mut rng = random::rng(seed);
    (0..pairs)
        .filter(|_| {
            let x = random_octonion(&mut rng, split);
            let y = random_octonion(&mut rng, split);
            let xy = cd_multiply(&x, &y).expect("same flavour");
            oct_norm(&xy) == &oct_norm(&x) * &oct_norm(&y)
        })
        .count()
}
