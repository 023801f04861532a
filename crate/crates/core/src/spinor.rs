//! Spinor spaces `Cl·F`: real bases, division-ring units and exact coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::blade::{blade_product, canonical_basis, subsets_of, Blade};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::idempotent::{decompose, primitive_idempotent, PrimitiveIdempotent};
use crate::involutions::grade_involution;
use crate::multivector::Multivector;
use crate::representation::{classify, RingTag};
use crate::scalars::{Ring, RingScalar};
use crate::signature::Signature;

/// Exact row echelon form of a list of multivectors, with back-references
/// to the original vectors so that coordinates can be recovered.
#[derive(Debug, Clone)]
pub struct Echelon {
    rows: Vec<EchelonRow>,
    len: usize,
}

#[derive(Debug, Clone)]
struct EchelonRow {
    pivot: Blade,
    vec: Multivector,
    combo: BTreeMap<usize, Dyadic>,
}

fn axpy(target: &mut BTreeMap<usize, Dyadic>, f: &Dyadic, src: &BTreeMap<usize, Dyadic>) {
    for (k, v) in src {
        let slot = target.entry(*k).or_insert_with(Dyadic::zero);
        *slot -= &(f * v);
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), len: 0 }
    }

    /// Echelon form of `vectors`, or the index of the first vector in the span of its predecessors.
    pub fn build(vectors: &[Multivector]) -> Result<std::result::Result<Self, usize>> {
        let mut e = Echelon::new();
        for (j, v) in vectors.iter().enumerate() {
            if !e.push(v)? {
                return Ok(Err(j));
            }
        }
        Ok(Ok(e))
    }

    /// Number of vectors pushed.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Append a vector; returns `false` and leaves the form unchanged if it is dependent.
    pub fn push(&mut self, v: &Multivector) -> Result<bool> {
        let mut v = v.clone();
        let mut combo = BTreeMap::from([(self.len, Dyadic::from_int(1))]);
        for row in &self.rows {
            let c = v.coefficient(row.pivot);
            if c.is_zero() {
                continue;
            }
            let f = c.checked_div(&row.vec.coefficient(row.pivot))?;
            v = v.try_sub(&row.vec.scale(&f))?;
            axpy(&mut combo, &f, &row.combo);
        }
        let Some(pivot) = v.first_blade() else {
            return Ok(false);
        };
        self.rows.push(EchelonRow { pivot, vec: v, combo });
        self.len += 1;
        Ok(true)
    }

    /// Push a group of vectors atomically: all or none.
    pub fn push_all(&mut self, vs: &[Multivector]) -> Result<bool> {
        let mut trial = self.clone();
        for v in vs {
            if !trial.push(v)? {
                return Ok(false);
            }
        }
        *self = trial;
        Ok(true)
    }

    /// Exact coordinates of `x` over the pushed vectors.
    pub fn coordinates(&self, x: &Multivector) -> Result<Vec<Dyadic>> {
        let mut x = x.clone();
        let mut acc: BTreeMap<usize, Dyadic> = BTreeMap::new();
        for row in &self.rows {
            let c = x.coefficient(row.pivot);
            if c.is_zero() {
                continue;
            }
            let f = c.checked_div(&row.vec.coefficient(row.pivot))?;
            x = x.try_sub(&row.vec.scale(&f))?;
            axpy(&mut acc, &(-&f), &row.combo);
        }
        if !x.is_zero() {
            return Err(Error::NoSolution(format!("residual {x}")));
        }
        Ok((0..self.len).map(|j| acc.remove(&j).unwrap_or_else(Dyadic::zero)).collect())
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

/// An identified division-ring unit `sign · β · F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarUnit {
    pub name: char,
    pub blade: Blade,
    pub sign: i8,
    pub element: Multivector,
}

impl ScalarUnit {
    /// Text such as `g12` or `-g14`.
    pub fn label(&self) -> String {
        if self.sign < 0 {
            format!("-{}", self.blade)
        } else {
            self.blade.to_string()
        }
    }
}

/// How the scalar units were chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitSource {
    /// No units: the ring is the reals.
    None,
    /// Taken from the tabulated rule.
    Table,
    /// The tabulated rule failed a relation, so units were searched for.
    Search { reason: String },
}

/// The spinor space `Cl·F` with its real basis and, for C and H, its module structure.
#[derive(Debug, Clone)]
pub struct SpinorBasis {
    pub signature: Signature,
    pub idempotent: PrimitiveIdempotent,
    /// The idempotent in use: `F`, or its grade involution for the hatted half.
    pub f: Multivector,
    pub hatted: bool,
    pub index_set: Vec<usize>,
    pub real_blades: Vec<Blade>,
    pub real_basis: Vec<Multivector>,
    pub ring_tag: RingTag,
    pub units: Vec<ScalarUnit>,
    pub unit_source: UnitSource,
    pub module_blades: Vec<Blade>,
    pub module_basis: Vec<Multivector>,
    real_echelon: Echelon,
    frame_echelon: Echelon,
}

/// The tabulated one-vector index set whose sub-products span the ideal.
pub(crate) fn tabulated_index_set(sig: Signature) -> Vec<usize> {
    let (p, q) = (sig.p(), sig.q());
    let (a, l) = decompose(sig);
    let mut s: Vec<usize>;
    let (c, extra): (usize, &[usize]) = if q >= p {
        s = (1..=p).collect();
        for i in 1..=l {
            let b = 2 * p + 8 * (i - 1);
            s.extend([b + 1, b + 2, b + 3, b + 5]);
        }
        let extra: &[usize] = match a {
            0 => &[],
            1 => &[1],
            2 | 3 => &[1, 2],
            _ => &[1, 2, 3],
        };
        (2 * p + 8 * l, extra)
    } else {
        s = (1..=q).collect();
        for i in 1..=l {
            let b = q + 8 * (i - 1);
            s.extend([b + 1, b + 2, b + 3, b + 5]);
        }
        let extra: &[usize] = match a {
            0 | 1 => &[],
            2 => &[2],
            3 => &[2, 3],
            4 => &[2, 3, 4],
            5 => &[1, 2, 3],
            _ => &[1, 2, 3, 5],
        };
        (q + 8 * l, extra)
    };
    s.extend(extra.iter().map(|t| c + t));
    s.sort_unstable();
    s
}

fn index_set(sig: Signature) -> Vec<usize> {
    if (sig.p(), sig.q()) == (3, 1) {
        vec![2, 3]
    } else {
        tabulated_index_set(sig)
    }
}

/// The ideal `Cl·F` with its real basis `{b·F}`, before any ring identification.
pub fn real_basis(sig: Signature) -> Result<SpinorBasis> {
    let idem = primitive_idempotent(sig)?;
    let f = idem.f.clone();
    let idx = index_set(sig);
    let real_blades = subsets_of(&idx)?;
    let real_basis: Vec<Multivector> = real_blades
        .iter()
        .map(|&b| Multivector::from_blade(sig, b).and_then(|m| m.try_mul(&f)))
        .collect::<Result<_>>()?;
    let want = 1usize << (sig.n() - idem.k());
    if real_basis.len() != want {
        return Err(Error::Dependent {
            sig,
            detail: format!("{} basis elements, expected {want}", real_basis.len()),
        });
    }
    let real_echelon = match Echelon::build(&real_basis)? {
        Ok(e) => e,
        Err(j) => {
            return Err(Error::Dependent { sig, detail: format!("{}F lies in the span of earlier elements", real_blades[j]) })
        }
    };
    Ok(SpinorBasis {
        signature: sig,
        idempotent: idem,
        f,
        hatted: false,
        index_set: idx,
        module_blades: real_blades.clone(),
        module_basis: real_basis.clone(),
        frame_echelon: real_echelon.clone(),
        real_blades,
        real_basis,
        ring_tag: classify(sig).ring_tag,
        units: Vec::new(),
        unit_source: UnitSource::None,
        real_echelon,
    })
}

/// Tabulated unit blades: one for C, three for H.
pub(crate) fn tabulated_units(sig: Signature) -> Result<Vec<Blade>> {
    let (p, q) = (sig.p(), sig.q());
    let (a, l) = decompose(sig);
    let idx: Vec<Vec<usize>> = if q >= p {
        let c = 2 * p + 8 * l;
        match a {
            1 => vec![vec![c + 1]],
            5 => vec![vec![c + 3]],
            2..=4 => vec![vec![2 * p + 1], vec![2 * p + 2], vec![2 * p + 1, 2 * p + 2]],
            _ => vec![],
        }
    } else {
        let c = q + 8 * l;
        match a {
            3 => vec![vec![1, c + 2]],
            7 => vec![vec![1, c + 5]],
            4..=6 => vec![vec![q + 1, q + 2], vec![q + 2, q + 3], vec![q + 1, q + 3]],
            _ => vec![],
        }
    };
    idx.iter().map(|m| Blade::from_indices(m)).collect()
}

struct UnitCheck<'a> {
    sig: Signature,
    f: &'a Multivector,
    members: &'a [Blade],
}

impl UnitCheck<'_> {
    fn element(&self, b: Blade) -> Result<Multivector> {
        Multivector::from_blade(self.sig, b)?.try_mul(self.f)
    }

    /// Why `β·F` fails to be a square root of `-F` inside `F·Cl·F`, if it does.
    fn defect(&self, b: Blade) -> Result<Option<String>> {
        b.check(self.sig)?;
        let u = self.element(b)?;
        if self.f.try_mul(&u)? != u {
            return Ok(Some(format!("{b}F is not fixed by F on the left")));
        }
        let sq = u.try_mul(&u)?;
        if sq != -self.f {
            return Ok(Some(format!("({b}F)^2 = {sq} instead of -F")));
        }
        Ok(None)
    }

    fn commutes_with_set(&self, b: Blade) -> Result<bool> {
        for &g in self.members {
            let (s1, _) = blade_product(b, g, self.sig)?;
            let (s2, _) = blade_product(g, b, self.sig)?;
            if s1 != s2 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn unit(&self, name: char, b: Blade, sign: i8) -> Result<ScalarUnit> {
        let e = self.element(b)?;
        Ok(ScalarUnit { name, blade: b, sign, element: if sign < 0 { -e } else { e } })
    }

    /// Product unit `k = i·j` expressed as a signed blade.
    fn product(&self, i: Blade, j: Blade) -> Result<ScalarUnit> {
        let (s, b) = blade_product(i, j, self.sig)?;
        self.unit('k', b, s)
    }

    /// First blades (grade >= 1) commuting with the generating set and squaring to -1.
    fn candidates(&self) -> Result<Vec<Blade>> {
        let mut out = Vec::new();
        for b in canonical_basis(self.sig) {
            if b.is_scalar() || !self.commutes_with_set(b)? {
                continue;
            }
            let (s, _) = blade_product(b, b, self.sig)?;
            if s < 0 {
                out.push(b);
            }
        }
        Ok(out)
    }
}

fn check_quaternion_relations(f: &Multivector, i: &Multivector, j: &Multivector, k: &Multivector) -> Result<()> {
    let neg_f = -f;
    let checks: [(&str, Multivector, Multivector); 9] = [
        ("i*i", i.try_mul(i)?, neg_f.clone()),
        ("j*j", j.try_mul(j)?, neg_f.clone()),
        ("k*k", k.try_mul(k)?, neg_f),
        ("i*j", i.try_mul(j)?, k.clone()),
        ("j*k", j.try_mul(k)?, i.clone()),
        ("k*i", k.try_mul(i)?, j.clone()),
        ("j*i", j.try_mul(i)?, -k),
        ("k*j", k.try_mul(j)?, -i),
        ("i*k", i.try_mul(k)?, -j),
    ];
    for (name, got, want) in checks {
        if got != want {
            return Err(Error::RelationViolation(format!("{name} = {got}, expected {want}")));
        }
    }
    Ok(())
}

/// Identify the C or H units inside `F·Cl·F` and reduce the real basis to a module basis.
pub fn identify_scalars(basis: SpinorBasis) -> Result<SpinorBasis> {
    let sig = basis.signature;
    let ring = basis.ring_tag.entry_ring();
    if ring == Ring::Real || basis.hatted {
        return Ok(basis);
    }
    let members = basis.idempotent.source.members.clone();
    let chk = UnitCheck { sig, f: &basis.f, members: &members };
    let table = tabulated_units(sig)?;
    let mut reason = None;
    for &b in &table {
        if let Some(d) = chk.defect(b)? {
            reason = Some(format!("tabulated unit: {d}"));
            break;
        }
    }
    if reason.is_none() && ring == Ring::Quaternion {
        let (i, j, k) = (chk.unit('i', table[0], 1)?, chk.unit('j', table[1], 1)?, chk.unit('k', table[2], 1)?);
        if let Err(e) = check_quaternion_relations(&basis.f, &i.element, &j.element, &k.element) {
            reason = Some(format!("tabulated units: {e}"));
        }
    }
    let (units, source) = match (reason, ring) {
        (None, Ring::Complex) => (vec![chk.unit('i', table[0], 1)?], UnitSource::Table),
        (None, _) => (
            vec![chk.unit('i', table[0], 1)?, chk.unit('j', table[1], 1)?, chk.unit('k', table[2], 1)?],
            UnitSource::Table,
        ),
        (Some(reason), _) => {
            let cands = chk.candidates()?;
            let first = *cands
                .first()
                .ok_or_else(|| Error::RelationViolation(format!("no square root of -F found for {sig}")))?;
            let units = if ring == Ring::Complex {
                vec![chk.unit('i', first, 1)?]
            } else {
                let second = cands
                    .iter()
                    .copied()
                    .find(|&c| {
                        let (s1, _) = blade_product(first, c, sig).expect("blades are in range");
                        let (s2, _) = blade_product(c, first, sig).expect("blades are in range");
                        s1 != s2
                    })
                    .ok_or_else(|| Error::RelationViolation(format!("no anticommuting unit pair for {sig}")))?;
                vec![chk.unit('i', first, 1)?, chk.unit('j', second, 1)?, chk.product(first, second)?]
            };
            (units, UnitSource::Search { reason })
        }
    };
    for u in &units {
        if let Some(d) = chk.defect(u.blade)? {
            return Err(Error::RelationViolation(format!("unit {}: {d}", u.name)));
        }
    }
    if units.len() == 3 {
        check_quaternion_relations(&basis.f, &units[0].element, &units[1].element, &units[2].element)?;
    }
    build_module(basis, units, source)
}

fn frame_of(b: &Multivector, units: &[ScalarUnit]) -> Result<Vec<Multivector>> {
    let mut out = vec![b.clone()];
    for u in units {
        out.push(b.try_mul(&u.element)?);
    }
    Ok(out)
}

fn build_module(mut basis: SpinorBasis, units: Vec<ScalarUnit>, source: UnitSource) -> Result<SpinorBasis> {
    let sig = basis.signature;
    let dim = units.len() + 1;
    let want = basis.real_basis.len() / dim;
    let mut echelon = Echelon::new();
    let mut blades = Vec::new();
    let mut elems = Vec::new();
    for (b, x) in basis.real_blades.iter().zip(&basis.real_basis) {
        if blades.len() == want {
            break;
        }
        if echelon.push_all(&frame_of(x, &units)?)? {
            blades.push(*b);
            elems.push(x.clone());
        }
    }
    if blades.len() != want || echelon.len() != basis.real_basis.len() {
        return Err(Error::Dependent {
            sig,
            detail: format!("module basis has {} elements, expected {want}", blades.len()),
        });
    }
    basis.units = units;
    basis.unit_source = source;
    basis.module_blades = blades;
    basis.module_basis = elems;
    basis.frame_echelon = echelon;
    Ok(basis)
}

/// Real basis followed by ring identification.
pub fn spinor_basis(sig: Signature) -> Result<SpinorBasis> {
    identify_scalars(real_basis(sig)?)
}

/// Coordinates of an ideal element over the real basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCoordinates {
    pub coords: Vec<Dyadic>,
}

/// Exact coordinates of `x` over the real basis, after checking `x·F = x`.
pub fn reduce_to_basis(x: &Multivector, basis: &SpinorBasis) -> Result<IdealCoordinates> {
    basis.check_in_ideal(x)?;
    Ok(IdealCoordinates { coords: basis.real_echelon.coordinates(x)? })
}

impl SpinorBasis {
    pub fn check_in_ideal(&self, x: &Multivector) -> Result<()> {
        if x.try_mul(&self.f)? != *x {
            return Err(Error::NotInIdeal(x.to_string()));
        }
        Ok(())
    }

    /// Real dimension of the entry ring.
    pub fn unit_dim(&self) -> usize {
        self.units.len() + 1
    }

    pub fn entry_ring(&self) -> Ring {
        self.ring_tag.entry_ring()
    }

    /// Ring coordinates of an ideal element over the module basis.
    pub fn module_coordinates(&self, x: &Multivector) -> Result<Vec<RingScalar>> {
        self.check_in_ideal(x)?;
        let raw = self.frame_echelon.coordinates(x)?;
        let d = self.unit_dim();
        if raw.len() != d * self.module_basis.len() {
            return Err(Error::FoldFailure(format!("{} coordinates for {} slots", raw.len(), self.module_basis.len())));
        }
        raw.chunks(d).map(|c| RingScalar::from_components(self.entry_ring(), c)).collect()
    }

    /// The same construction transported by the grade involution.
    pub fn hatted(&self) -> Result<SpinorBasis> {
        let sig = self.signature;
        let f = grade_involution(&self.f);
        let map = |v: &[Multivector]| v.iter().map(grade_involution).collect::<Vec<_>>();
        let real_basis = map(&self.real_basis);
        let module_basis = map(&self.module_basis);
        let units: Vec<ScalarUnit> = self
            .units
            .iter()
            .map(|u| ScalarUnit { element: grade_involution(&u.element), ..u.clone() })
            .collect();
        let real_echelon = Echelon::build(&real_basis)?
            .map_err(|j| Error::Dependent { sig, detail: format!("hatted element {j} is dependent") })?;
        let mut frames = Vec::new();
        for b in &module_basis {
            frames.extend(frame_of(b, &units)?);
        }
        let frame_echelon = Echelon::build(&frames)?
            .map_err(|j| Error::Dependent { sig, detail: format!("hatted frame element {j} is dependent") })?;
        // sanity: the hatted idempotent is the product over grade-involuted members
        let members: Vec<Multivector> = self
            .idempotent
            .source
            .members
            .iter()
            .map(|&g| Multivector::from_blade(sig, g).map(|m| grade_involution(&m)))
            .collect::<Result<_>>()?;
        let mut check = Multivector::one(sig);
        for g in &members {
            let one = Multivector::one(sig);
            check = check.try_mul(&one.try_add(g)?.shl(-1))?;
        }
        if check != f {
            return Err(Error::Inconsistent { sig, detail: "hatted idempotent mismatch".into() });
        }
        Ok(SpinorBasis {
            f,
            hatted: true,
            real_basis,
            module_basis,
            units,
            real_echelon,
            frame_echelon,
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }
    fn blade_names(v: &[Blade]) -> Vec<String> {
        v.iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn real_basis_examples() {
        assert_eq!(blade_names(&real_basis(sig(3, 1)).unwrap().real_blades), ["1", "g2", "g3", "g23"]);
        assert_eq!(
            blade_names(&real_basis(sig(2, 3)).unwrap().real_blades),
            ["1", "g1", "g2", "g5", "g12", "g15", "g25", "g125"]
        );
        assert_eq!(blade_names(&real_basis(sig(0, 0)).unwrap().real_blades), ["1"]);
        assert_eq!(
            blade_names(&real_basis(sig(0, 7)).unwrap().real_blades),
            ["1", "g1", "g2", "g3", "g12", "g13", "g23", "g123"]
        );
    }

    #[test]
    fn scalar_identification_examples() {
        let b = spinor_basis(sig(1, 2)).unwrap();
        assert_eq!(blade_names(&b.module_blades), ["1", "g1"]);
        assert_eq!(b.units[0].label(), "g3");
        assert_eq!(b.unit_source, UnitSource::Table);

        let b = spinor_basis(sig(2, 3)).unwrap();
        assert_eq!(blade_names(&b.module_blades), ["1", "g1", "g2", "g12"]);
        assert_eq!(b.units[0].label(), "g5");

        let b = spinor_basis(sig(0, 4)).unwrap();
        assert_eq!(blade_names(&b.module_blades), ["1", "g1"]);
        assert_eq!(b.units.len(), 3);
        assert!(matches!(b.unit_source, UnitSource::Search { .. }));
    }

    #[test]
    fn reduction_examples() {
        let s = sig(3, 1);
        let b = real_basis(s).unwrap();
        let f = b.f.clone();
        let c = reduce_to_basis(&f, &b).unwrap().coords;
        assert_eq!(c[0], Dyadic::from_int(1));
        assert!(c[1..].iter().all(Zero::is_zero));
        let g1f = Multivector::generator(s, 1).unwrap().try_mul(&f).unwrap();
        assert_eq!(reduce_to_basis(&g1f, &b).unwrap(), reduce_to_basis(&f, &b).unwrap());
        let g4f = Multivector::generator(s, 4).unwrap().try_mul(&f).unwrap();
        let g2f = Multivector::generator(s, 2).unwrap().try_mul(&f).unwrap();
        assert_eq!(reduce_to_basis(&g4f, &b).unwrap(), reduce_to_basis(&g2f, &b).unwrap());
    }

    #[test]
    fn reduction_errors() {
        let s = sig(3, 1);
        let b = real_basis(s).unwrap();
        let g2 = Multivector::generator(s, 2).unwrap();
        assert!(matches!(reduce_to_basis(&g2, &b), Err(Error::NotInIdeal(_))));
        let mut broken = b.clone();
        broken.real_echelon = Echelon::build(&b.real_basis[..2]).unwrap().unwrap();
        let far = b.real_basis[3].clone();
        assert!(matches!(reduce_to_basis(&far, &broken), Err(Error::NoSolution(_))));
    }

    #[test]
    fn echelon_detects_dependence() {
        let s = sig(0, 2);
        let a = Multivector::parse(s, "1 + g1").unwrap();
        let b = Multivector::parse(s, "g1 - g12").unwrap();
        let c = Multivector::parse(s, "2 + g1 + g12").unwrap();
        assert_eq!(Echelon::build(&[a.clone(), b.clone(), c]).unwrap().unwrap_err(), 2);
        let e = Echelon::build(&[a.clone(), b.clone()]).unwrap().unwrap();
        let x = Multivector::parse(s, "3 + 11/2 g1 - 5/2 g12").unwrap();
        let co = e.coordinates(&x).unwrap();
        assert_eq!(&a.scale(&co[0]) + &b.scale(&co[1]), x);
    }
}
