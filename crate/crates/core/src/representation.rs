//! Mod-8 classification and exact generator matrices over R, C and H.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blade::{canonical_basis, Blade};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::idempotent::residue;
use crate::multivector::Multivector;
use crate::scalars::{Ring, RingScalar};
use crate::signature::Signature;
use crate::spinor::{spinor_basis, SpinorBasis};

/// The algebra type of `Cl_{p,q}`: a matrix ring over R, C or H, or a double of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    R,
    C,
    H,
    RR,
    HH,
}

impl RingTag {
    pub fn entry_ring(self) -> Ring {
        match self {
            RingTag::R | RingTag::RR => Ring::Real,
            RingTag::C => Ring::Complex,
            RingTag::H | RingTag::HH => Ring::Quaternion,
        }
    }

    pub fn is_double(self) -> bool {
        matches!(self, RingTag::RR | RingTag::HH)
    }

    /// `R`, `C`, `H`, `R+R` or `H+H`.
    pub fn label(self) -> &'static str {
        match self {
            RingTag::R => "R",
            RingTag::C => "C",
            RingTag::H => "H",
            RingTag::RR => "R+R",
            RingTag::HH => "H+H",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "R" => RingTag::R,
            "C" => RingTag::C,
            "H" => RingTag::H,
            "R+R" => RingTag::RR,
            "H+H" => RingTag::HH,
            other => return Err(Error::Parse(format!("unknown ring `{other}`"))),
        })
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Ring, matrix size and semisimplicity of a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordClass {
    pub ring_tag: RingTag,
    pub dim: usize,
    pub semisimple: bool,
}

impl CliffordClass {
    /// Spinor space label such as `H^2`, `R^8+R^8` or `C`.
    pub fn spinor_space(&self) -> String {
        let base = |r: &str| if self.dim == 1 { r.to_string() } else { format!("{r}^{}", self.dim) };
        match self.ring_tag {
            RingTag::RR => format!("{}+{}", base("R"), base("R")),
            RingTag::HH => format!("{}+{}", base("H"), base("H")),
            t => base(t.label()),
        }
    }
}

/// Classify `Cl_{p,q}` by the residue of `q - p` mod 8.
pub fn classify(sig: Signature) -> CliffordClass {
    let n = sig.n() as u32;
    let (ring_tag, log_dim) = match residue(sig) {
        0 | 6 => (RingTag::R, n / 2),
        1 | 5 => (RingTag::C, (n - 1) / 2),
        2 | 4 => (RingTag::H, n / 2 - 1),
        3 => (RingTag::HH, (n - 3) / 2),
        _ => (RingTag::RR, (n - 1) / 2),
    };
    CliffordClass { ring_tag, dim: 1usize << log_dim, semisimple: ring_tag.is_double() }
}

/// Square matrix with entries in one ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    ring: Ring,
    dim: usize,
    entries: Vec<RingScalar>,
}

impl RingMatrix {
    pub fn zero(ring: Ring, dim: usize) -> Self {
        RingMatrix { ring, dim, entries: vec![RingScalar::zero(ring); dim * dim] }
    }

    pub fn identity(ring: Ring, dim: usize) -> Self {
        Self::scalar_identity(ring, dim, &Dyadic::from_int(1))
    }

    pub fn scalar_identity(ring: Ring, dim: usize, c: &Dyadic) -> Self {
        let mut m = Self::zero(ring, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = RingScalar::from_components(ring, std::slice::from_ref(c)).expect("real fits every ring");
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<RingScalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::ShapeMismatch(format!("row of length {} in a {dim}x{dim} matrix", row.len())));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::TagMismatch(format!("{:?} entry in a {ring:?} matrix", e.ring())));
                }
                entries.push(e);
            }
        }
        Ok(RingMatrix { ring, dim, entries })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &RingScalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RingScalar) -> Result<()> {
        if v.ring() != self.ring {
            return Err(Error::TagMismatch(format!("{:?} entry in a {:?} matrix", v.ring(), self.ring)));
        }
        self.entries[r * self.dim + c] = v;
        Ok(())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingScalar]> {
        self.entries.chunks(self.dim.max(1))
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.ring != o.ring || self.dim != o.dim {
            return Err(Error::ShapeMismatch(format!(
                "{:?} {}x{} vs {:?} {}x{}",
                self.ring, self.dim, self.dim, o.ring, o.dim, o.dim
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let d = self.dim;
        let mut out = Self::zero(self.ring, d);
        for r in 0..d {
            for t in 0..d {
                let a = self.get(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = o.get(t, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * d + c;
                    out.entries[idx] = out.entries[idx].try_add(&a.try_mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(RingMatrix { ring: self.ring, dim: self.dim, entries })
    }

    pub fn neg(&self) -> Self {
        RingMatrix { ring: self.ring, dim: self.dim, entries: self.entries.iter().map(RingScalar::neg).collect() }
    }

    /// Multiply by a real scalar.
    pub fn scale(&self, c: &Dyadic) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let comps: Vec<Dyadic> = e.components()[..self.ring.real_dim()].iter().map(|x| x * c).collect();
                RingScalar::from_components(self.ring, &comps).expect("same ring")
            })
            .collect();
        RingMatrix { ring: self.ring, dim: self.dim, entries }
    }

    /// Every entry lies in `{0, ±1, ±i, ±j, ±k}`.
    pub fn in_unit_alphabet(&self) -> bool {
        self.entries.iter().all(RingScalar::is_unit_alphabet)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingScalar::is_zero)
    }
}

/// Generator matrices acting on one spinor space.
#[derive(Debug, Clone)]
pub struct Half {
    pub basis: SpinorBasis,
    pub matrices: Vec<RingMatrix>,
}

/// The spinor representation of a signature: one half, or two for semisimple algebras.
#[derive(Debug, Clone)]
pub struct Representation {
    pub signature: Signature,
    pub class: CliffordClass,
    pub basis: SpinorBasis,
    pub matrices: Vec<RingMatrix>,
    /// The grade-involuted half, present exactly when the algebra is semisimple.
    pub hat: Option<Half>,
}

/// Matrix of left multiplication by `x` on a spinor basis; column `j` holds the coordinates of `x·b_j`.
pub fn left_action_matrix(basis: &SpinorBasis, x: &Multivector) -> Result<RingMatrix> {
    let m = basis.module_basis.len();
    let mut rows = vec![Vec::with_capacity(m); m];
    for b in &basis.module_basis {
        let col = basis.module_coordinates(&x.try_mul(b)?)?;
        for (r, e) in col.into_iter().enumerate() {
            rows[r].push(e);
        }
    }
    RingMatrix::from_rows(basis.entry_ring(), rows)
}

fn extract(basis: &SpinorBasis) -> Result<Vec<RingMatrix>> {
    let sig = basis.signature;
    (1..=sig.n())
        .map(|i| {
            let m = left_action_matrix(basis, &Multivector::generator(sig, i)?)?;
            if !m.in_unit_alphabet() {
                return Err(Error::Inconsistent { sig, detail: format!("generator {i} has an entry outside 0, ±1, ±i, ±j, ±k") });
            }
            Ok(m)
        })
        .collect()
}

/// Build the representation and check the defining relations on every half.
pub fn generator_matrices(sig: Signature) -> Result<Representation> {
    let class = classify(sig);
    let basis = spinor_basis(sig)?;
    if basis.module_basis.len() != class.dim {
        return Err(Error::Inconsistent {
            sig,
            detail: format!("module basis of size {} but the class needs {}", basis.module_basis.len(), class.dim),
        });
    }
    let matrices = extract(&basis)?;
    let hat = if class.semisimple {
        let hb = basis.hatted()?;
        let hm = extract(&hb)?;
        for (i, (a, b)) in matrices.iter().zip(&hm).enumerate() {
            if *b != a.neg() {
                return Err(Error::Inconsistent { sig, detail: format!("hatted generator {} is not the negative", i + 1) });
            }
        }
        Some(Half { basis: hb, matrices: hm })
    } else {
        None
    };
    let rep = Representation { signature: sig, class, basis, matrices, hat };
    if let Some((i, j)) = anticommutator_witness(sig, &rep.matrices)? {
        return Err(Error::RelationViolation(format!("{sig}: generators {i} and {j}")));
    }
    Ok(rep)
}

/// First `(i, j)` with `M_i M_j + M_j M_i != 2 B(e_i, e_j) I`, one-based.
pub fn anticommutator_witness(sig: Signature, mats: &[RingMatrix]) -> Result<Option<(usize, usize)>> {
    if mats.len() != sig.n() {
        return Err(Error::Inconsistent { sig, detail: format!("{} matrices for {} generators", mats.len(), sig.n()) });
    }
    for i in 0..mats.len() {
        for j in i..mats.len() {
            let s = mats[i].try_mul(&mats[j])?.try_add(&mats[j].try_mul(&mats[i])?)?;
            let want = 2 * i64::from(sig.bilinear(i + 1, j + 1)?);
            let target = RingMatrix::scalar_identity(mats[i].ring(), mats[i].dim(), &Dyadic::from_int(want));
            if s != target {
                return Ok(Some((i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

/// Ordered product of generator matrices for a blade.
pub fn blade_matrix(mats: &[RingMatrix], ring: Ring, dim: usize, b: Blade) -> Result<RingMatrix> {
    let mut m = RingMatrix::identity(ring, dim);
    for i in b.indices() {
        let g = mats.get(i - 1).ok_or(Error::IndexOutOfRange { index: i, n: mats.len() })?;
        m = m.try_mul(g)?;
    }
    Ok(m)
}

/// Outcome of checking the half-representations against each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalvesReport {
    pub hat_witness: Option<(usize, usize)>,
    pub negated: bool,
    pub pseudoscalar_opposite: bool,
}

/// Result of [`verify_relations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub signature: Signature,
    pub witness: Option<(usize, usize)>,
    pub words_checked: usize,
    pub word_witness: Option<Blade>,
    pub halves: Option<HalvesReport>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
            && self.word_witness.is_none()
            && self
                .halves
                .as_ref()
                .is_none_or(|h| h.hat_witness.is_none() && h.negated && h.pseudoscalar_opposite)
    }
}

/// Blades used for the word check: all of them for `n <= 4`, else a seeded sample of 32.
fn sample_words(sig: Signature) -> Vec<Blade> {
    let all = canonical_basis(sig);
    if sig.n() <= 4 {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sig.n() as u64 * 1009 + sig.p() as u64);
    let mut picked: Vec<Blade> = all.choose_multiple(&mut rng, 32).copied().collect();
    picked.sort();
    picked
}

/// Check the anticommutation relations exactly and compare blade matrices
/// extracted from the ideal against products of generator matrices.
pub fn verify_relations(rep: &Representation) -> Result<RelationReport> {
    let sig = rep.signature;
    let witness = anticommutator_witness(sig, &rep.matrices)?;
    let ring = rep.basis.entry_ring();
    let dim = rep.basis.module_basis.len();
    let words = sample_words(sig);
    let mut word_witness = None;
    for &w in &words {
        let direct = left_action_matrix(&rep.basis, &Multivector::from_blade(sig, w)?)?;
        if direct != blade_matrix(&rep.matrices, ring, dim, w)? {
            word_witness = Some(w);
            break;
        }
    }
    let halves = match &rep.hat {
        None => None,
        Some(h) => {
            let hat_witness = anticommutator_witness(sig, &h.matrices)?;
            let negated = rep.matrices.iter().zip(&h.matrices).all(|(a, b)| *b == a.neg());
            let top = Blade::from_mask((1u32 << sig.n()) - 1);
            let w = blade_matrix(&rep.matrices, ring, dim, top)?;
            let wh = blade_matrix(&h.matrices, ring, dim, top)?;
            let id = RingMatrix::identity(ring, dim);
            let pseudoscalar_opposite =
                (w == id && wh == id.neg()) || (w == id.neg() && wh == id);
            Some(HalvesReport { hat_witness, negated, pseudoscalar_opposite })
        }
    };
    Ok(RelationReport { signature: sig, witness, words_checked: words.len(), word_witness, halves })
}

impl Representation {
    pub fn entry_ring(&self) -> Ring {
        self.basis.entry_ring()
    }

    pub fn dim(&self) -> usize {
        self.class.dim
    }

    /// Linear extension of the generator matrices to an arbitrary multivector.
    pub fn element_matrix(&self, x: &Multivector) -> Result<RingMatrix> {
        if x.signature() != self.signature {
            return Err(Error::SignatureMismatch { left: x.signature(), right: self.signature });
        }
        let ring = self.entry_ring();
        let mut acc = RingMatrix::zero(ring, self.dim());
        for (b, c) in x.terms() {
            acc = acc.try_add(&blade_matrix(&self.matrices, ring, self.dim(), *b)?.scale(c))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }
    fn rows(m: &RingMatrix) -> Vec<Vec<String>> {
        m.rows().map(|r| r.iter().map(|e| e.to_text()).collect()).collect()
    }

    #[test]
    fn classification_examples() {
        let c = classify(sig(0, 7));
        assert_eq!((c.ring_tag, c.dim, c.semisimple), (RingTag::RR, 8, true));
        let c = classify(sig(1, 3));
        assert_eq!((c.ring_tag, c.dim), (RingTag::H, 2));
        let c = classify(sig(0, 0));
        assert_eq!((c.ring_tag, c.dim), (RingTag::R, 1));
        let c = classify(sig(0, 3));
        assert_eq!((c.ring_tag, c.dim), (RingTag::HH, 1));
        assert_eq!(classify(sig(0, 7)).spinor_space(), "R^8+R^8");
        assert_eq!(classify(sig(0, 2)).spinor_space(), "H");
    }

    #[test]
    fn quaternion_generators_for_cl02() {
        let rep = generator_matrices(sig(0, 2)).unwrap();
        assert_eq!(rows(&rep.matrices[0]), [["i"]]);
        assert_eq!(rows(&rep.matrices[1]), [["j"]]);
    }

    #[test]
    fn cl13_matrices() {
        let rep = generator_matrices(sig(1, 3)).unwrap();
        assert_eq!(rows(&rep.matrices[2]), [["i", "0"], ["0", "-i"]]);
        assert_eq!(rows(&rep.matrices[0]), [["0", "1"], ["1", "0"]]);
    }

    #[test]
    fn cl23_complex_generator() {
        let rep = generator_matrices(sig(2, 3)).unwrap();
        let g5 = &rep.matrices[4];
        assert_eq!(g5.dim(), 4);
        let diag: Vec<String> = (0..4).map(|i| g5.get(i, i).to_text()).collect();
        assert_eq!(diag, ["i", "-i", "-i", "i"]);
    }

    #[test]
    fn mutation_is_caught() {
        let mut rep = generator_matrices(sig(1, 3)).unwrap();
        assert!(verify_relations(&rep).unwrap().passed());
        let e = rep.matrices[0].get(0, 1).neg();
        rep.matrices[0].set(0, 1, e).unwrap();
        let report = verify_relations(&rep).unwrap();
        assert!(!report.passed());
        assert_eq!(report.witness, Some((1, 1)));
    }

    #[test]
    fn semisimple_halves() {
        let rep = generator_matrices(sig(0, 7)).unwrap();
        let r = verify_relations(&rep).unwrap();
        assert!(r.passed());
        let h = r.halves.unwrap();
        assert!(h.negated && h.pseudoscalar_opposite);
    }
}
