//! Basis monomials `γ_{i1…ik}` encoded as bit masks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// A canonical monomial: bit `i - 1` set means generator `γ_i` is present.
///
/// Ordering is grade first, then lexicographic on the ascending index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// Build from one-based indices in any order; repeats are rejected.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > 32 {
                return Err(Error::IndexOutOfRange { index: i, n: 32 });
            }
            let bit = 1u32 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::Parse(format!("repeated index {i} in blade")));
            }
            mask |= bit;
        }
        Ok(Blade(mask))
    }

    pub fn generator(i: usize) -> Result<Self> {
        Self::from_indices(&[i])
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }

    /// Ascending one-based indices.
    pub fn indices(&self) -> Vec<usize> {
        let mut m = self.0;
        let mut out = Vec::with_capacity(m.count_ones() as usize);
        while m != 0 {
            let t = m.trailing_zeros();
            out.push(t as usize + 1);
            m &= m - 1;
        }
        out
    }

    pub fn max_index(&self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn check(&self, sig: Signature) -> Result<()> {
        let top = self.max_index();
        if top > sig.n() {
            return Err(Error::IndexOutOfRange { index: top, n: sig.n() });
        }
        Ok(())
    }

    /// `(-1)^(grade choose 2)`: the sign picked up by reversing the factor order.
    pub fn reversion_sign(&self) -> i8 {
        let r = self.grade();
        if (r * r.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Sign of `γ_a γ_b` relative to the canonical blade `a ^ b`, without range checks.
#[inline]
pub(crate) fn product_sign(a: u32, b: u32, neg_mask: u32) -> i8 {
    let mut swaps = 0u32;
    let mut m = b;
    while m != 0 {
        let t = m.trailing_zeros();
        // indices of a strictly greater than index t + 1
        swaps += (a >> (t + 1)).count_ones();
        m &= m - 1;
    }
    swaps += (a & b & neg_mask).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Clifford product of two monomials: `γ_a γ_b = sign · γ_result`.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> Result<(i8, Blade)> {
    a.check(sig)?;
    b.check(sig)?;
    Ok((product_sign(a.0, b.0, sig.negative_mask()), Blade(a.0 ^ b.0)))
}

/// All `2^n` blades in canonical order.
pub fn canonical_basis(sig: Signature) -> Vec<Blade> {
    let mut all: Vec<Blade> = (0..(1u32 << sig.n())).map(Blade).collect();
    all.sort();
    all
}

/// All sub-products of an index list, in canonical order.
pub fn subsets_of(indices: &[usize]) -> Result<Vec<Blade>> {
    let base = Blade::from_indices(indices)?.indices();
    let mut out = Vec::with_capacity(1 << base.len());
    for sel in 0u32..(1u32 << base.len()) {
        let chosen: Vec<usize> =
            base.iter().enumerate().filter(|(j, _)| sel >> j & 1 == 1).map(|(_, &i)| i).collect();
        out.push(Blade::from_indices(&chosen)?);
    }
    out.sort();
    Ok(out)
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the first differing index belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    /// `1` for the scalar, `g124` for single-digit indices, `g{1,10}` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "1");
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i < 10) {
            write!(f, "g")?;
            for i in idx {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "g{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Blade {
    type Err = Error;

    /// Parses `1`, `g124`, `g{1,10,12}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Blade::SCALAR);
        }
        let body = s.strip_prefix('g').ok_or_else(|| Error::Parse(format!("invalid blade `{s}`")))?;
        let idx: Vec<usize> = if let Some(inner) = body.strip_prefix('{') {
            let inner =
                inner.strip_suffix('}').ok_or_else(|| Error::Parse(format!("unclosed blade `{s}`")))?;
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid blade `{s}`"))))
                .collect::<Result<_>>()?
        } else {
            if body.is_empty() {
                return Err(Error::Parse(format!("empty blade `{s}`")));
            }
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("invalid blade `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        let b = Blade::from_indices(&idx)?;
        if b.indices() != idx {
            return Err(Error::Parse(format!("blade indices must ascend in `{s}`")));
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }
    fn b(s: &str) -> Blade {
        s.parse().unwrap()
    }

    #[test]
    fn generator_squares() {
        assert_eq!(blade_product(b("g1"), b("g1"), sig(0, 1)).unwrap(), (-1, Blade::SCALAR));
        assert_eq!(blade_product(b("g1"), b("g1"), sig(1, 0)).unwrap(), (1, Blade::SCALAR));
    }

    #[test]
    fn anticommuting_pair() {
        assert_eq!(blade_product(b("g1"), b("g2"), sig(0, 2)).unwrap(), (1, b("g12")));
        assert_eq!(blade_product(b("g2"), b("g1"), sig(0, 2)).unwrap(), (-1, b("g12")));
        assert_eq!(blade_product(Blade::SCALAR, b("g5"), sig(0, 5)).unwrap(), (1, b("g5")));
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(matches!(
            blade_product(b("g3"), b("g1"), sig(1, 1)),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn canonical_order() {
        let names: Vec<String> = canonical_basis(sig(0, 3)).iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "g1", "g2", "g3", "g12", "g13", "g23", "g123"]);
        assert_eq!(canonical_basis(sig(0, 0)), vec![Blade::SCALAR]);
        assert!(b("g14") < b("g23"));
        assert!(b("g123") < b("g124"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(b("g{1,10,12}").indices(), vec![1, 10, 12]);
        assert_eq!(b("g{1,10,12}").to_string(), "g{1,10,12}");
        assert_eq!(b("g{1,2}"), b("g12"));
        assert!("g21".parse::<Blade>().is_err());
        assert!("g0".parse::<Blade>().is_err());
        assert!("h1".parse::<Blade>().is_err());
    }

    #[test]
    fn subsets_in_canonical_order() {
        let s: Vec<String> = subsets_of(&[2, 3]).unwrap().iter().map(|b| b.to_string()).collect();
        assert_eq!(s, ["1", "g2", "g3", "g23"]);
    }
}
