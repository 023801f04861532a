//! Radon–Hurwitz counts, generating sets of commuting involutions and primitive idempotents.

use num_traits::One;

use crate::blade::{blade_product, Blade};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::signature::Signature;

/// Radon–Hurwitz number `r_i` for `|i| <= 64`.
pub fn radon_hurwitz(i: i64) -> i64 {
    assert!(i.abs() <= 64, "radon_hurwitz is defined here for |i| <= 64");
    if i >= 8 {
        radon_hurwitz(i - 8) + 4
    } else if i >= 0 {
        [0, 1, 2, 2, 3, 3, 3, 3][i as usize]
    } else if i == -1 {
        -1
    } else {
        let j = -i;
        1 - j + radon_hurwitz(j - 2)
    }
}

/// `k = q - r_{q-p}`. Takes raw counts so it also covers `p + q` beyond the blade cap.
pub fn involution_count_formula(p: usize, q: usize) -> i64 {
    let (p, q) = (p as i64, q as i64);
    q - radon_hurwitz(q - p)
}

/// `k` from the residue of `q - p` mod 8.
pub fn involution_count_mod8(p: usize, q: usize) -> i64 {
    let half = ((p + q) / 2) as i64;
    match (q as i64 - p as i64).rem_euclid(8) {
        0 | 1 | 3 | 5 | 6 => half,
        2 | 4 => half - 1,
        _ => half + 1,
    }
}

/// `(q - p) mod 8` in `0..8`.
pub fn residue(sig: Signature) -> usize {
    (sig.q() as i64 - sig.p() as i64).rem_euclid(8) as usize
}

/// Number of commuting involutions in a generating set, checked by two independent rules.
pub fn involution_count(sig: Signature) -> Result<usize> {
    let a = involution_count_formula(sig.p(), sig.q());
    let b = involution_count_mod8(sig.p(), sig.q());
    if a != b || a < 0 {
        return Err(Error::Inconsistent {
            sig,
            detail: format!("Radon-Hurwitz count {a} disagrees with the mod-8 count {b}"),
        });
    }
    Ok(a as usize)
}

/// Where a generating set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetSource {
    /// The tabulated rule for the signature's residue class.
    Table,
    /// The worked choice used for `Cl_{3,1}`, which the matrices elsewhere are built on.
    WorkedExample,
}

/// Commuting, independent monomials squaring to `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub signature: Signature,
    pub members: Vec<Blade>,
    pub source: SetSource,
}

/// Split `(p, q)` into `(a, l)` with `|q - p| = a + 8l`.
pub(crate) fn decompose(sig: Signature) -> (usize, usize) {
    let d = sig.q().abs_diff(sig.p());
    (d % 8, d / 8)
}

/// The four 4-vectors filling one block of eight generators after offset `b`.
fn block_members(b: usize) -> [[usize; 4]; 4] {
    [
        [b + 1, b + 2, b + 3, b + 4],
        [b + 1, b + 2, b + 5, b + 6],
        [b + 1, b + 2, b + 7, b + 8],
        [b + 1, b + 3, b + 5, b + 7],
    ]
}

/// Table rule without validation.
pub(crate) fn tabulated_members(sig: Signature) -> Result<Vec<Blade>> {
    let (p, q) = (sig.p(), sig.q());
    let (a, l) = decompose(sig);
    let mut idx: Vec<Vec<usize>> = Vec::new();
    let (offset, extras): (usize, Vec<Vec<usize>>) = if q >= p {
        idx.extend((1..=p).map(|i| vec![i, p + i]));
        for i in 1..=l {
            idx.extend(block_members(2 * p + 8 * (i - 1)).iter().map(|m| m.to_vec()));
        }
        let extras = match a {
            0..=2 => vec![],
            3 => vec![vec![1, 2, 3]],
            4 => vec![vec![1, 2, 3, 4]],
            5 => vec![vec![1, 2, 3, 4], vec![1, 2, 5]],
            6 => vec![vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 6]],
            _ => vec![vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 6], vec![4, 5, 7]],
        };
        (2 * p + 8 * l, extras)
    } else {
        idx.extend((1..=q).map(|i| vec![i, q + 8 * l + a + i]));
        for i in 1..=l {
            idx.extend(block_members(q + 8 * (i - 1)).iter().map(|m| m.to_vec()));
        }
        let extras = match a {
            0 => vec![],
            1..=4 => vec![vec![1]],
            5 => vec![vec![1, 2, 3, 4], vec![5]],
            6 => vec![vec![1, 2, 3, 4], vec![1, 2, 5, 6]],
            _ => vec![vec![1, 2, 3, 4], vec![1, 2, 5, 6], vec![7]],
        };
        (q + 8 * l, extras)
    };
    idx.extend(extras.into_iter().map(|e| e.into_iter().map(|t| offset + t).collect()));
    idx.iter().map(|m| Blade::from_indices(m)).collect()
}

/// The generating set for a signature, validated before it is returned.
pub fn generating_set(sig: Signature) -> Result<GeneratingSet> {
    let (members, source) = if (sig.p(), sig.q()) == (3, 1) {
        (vec![Blade::generator(1)?, Blade::from_indices(&[2, 4])?], SetSource::WorkedExample)
    } else {
        (tabulated_members(sig)?, SetSource::Table)
    };
    let set = GeneratingSet { signature: sig, members, source };
    set.validate()?;
    Ok(set)
}

impl GeneratingSet {
    /// Check squares, commutation, independence and cardinality.
    pub fn validate(&self) -> Result<()> {
        let sig = self.signature;
        let fail = |detail: String| Error::GeneratingSet { sig, detail };
        for &g in &self.members {
            g.check(sig)?;
            let (s, r) = blade_product(g, g, sig)?;
            if s != 1 || !r.is_scalar() {
                return Err(fail(format!("{g} squares to -1")));
            }
        }
        for (x, &g) in self.members.iter().enumerate() {
            for &h in &self.members[x + 1..] {
                let (s1, _) = blade_product(g, h, sig)?;
                let (s2, _) = blade_product(h, g, sig)?;
                if s1 != s2 {
                    return Err(fail(format!("{g} and {h} anticommute")));
                }
            }
        }
        // Independence: no nonempty product of members collapses to the scalar blade.
        let k = self.members.len();
        for sel in 1u64..(1u64 << k) {
            let mask = (0..k).filter(|j| sel >> j & 1 == 1).fold(0u32, |m, j| m ^ self.members[j].mask());
            if mask == 0 {
                return Err(fail(format!("members selected by {sel:#b} multiply to a scalar")));
            }
        }
        let want = involution_count(sig)?;
        if k != want {
            return Err(fail(format!("{k} members, expected {want}")));
        }
        Ok(())
    }
}

/// `F = Π (1 + g) / 2` over a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveIdempotent {
    pub f: Multivector,
    pub source: GeneratingSet,
}

/// Expand `Π (1 + g)/2` for the given members.
pub fn idempotent_from(sig: Signature, members: &[Blade]) -> Result<Multivector> {
    let mut f = Multivector::one(sig);
    let half = Dyadic::half_pow(1);
    for &g in members {
        let factor = Multivector::from_terms(sig, [(Blade::SCALAR, half.clone()), (g, half.clone())])?;
        f = f.try_mul(&factor)?;
    }
    Ok(f)
}

/// The primitive idempotent of a signature, checked to satisfy `F² = F`.
pub fn primitive_idempotent(sig: Signature) -> Result<PrimitiveIdempotent> {
    let set = generating_set(sig)?;
    let f = idempotent_from(sig, &set.members)?;
    let expected_terms = 1usize << set.members.len();
    let uniform = f.terms().all(|(_, c)| c.abs() == Dyadic::half_pow(set.members.len() as u32));
    if f.len() != expected_terms || !uniform {
        return Err(Error::Inconsistent { sig, detail: format!("idempotent {f} is not a uniform expansion") });
    }
    if f.try_mul(&f)? != f {
        return Err(Error::Inconsistent { sig, detail: "F squared differs from F".into() });
    }
    Ok(PrimitiveIdempotent { f, source: set })
}

/// `(1 + s g) / 2` for a sign `s`.
pub fn one_factor(sig: Signature, g: Blade, s: i8) -> Result<Multivector> {
    let half = Dyadic::half_pow(1);
    let c = if s < 0 { -&half } else { half.clone() };
    Multivector::from_terms(sig, [(Blade::SCALAR, half), (g, c)])
}

impl PrimitiveIdempotent {
    pub fn k(&self) -> usize {
        self.source.members.len()
    }

    pub fn is_unit(&self) -> bool {
        self.f.as_scalar().is_some_and(|c| c.is_one())
    }
}
