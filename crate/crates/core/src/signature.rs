//! Quadratic signatures `(p, q)` with a diagonal bilinear form.

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on `n = p + q`.
pub const DEFAULT_MAX_N: usize = 16;

/// Hard bound imposed by the `u32` blade encoding.
pub const ABSOLUTE_MAX_N: usize = 30;

/// The active cap on `n`: `CLIFFGEN_MAX_N` if set and valid, else [`DEFAULT_MAX_N`].
pub fn max_n() -> usize {
    std::env::var("CLIFFGEN_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(ABSOLUTE_MAX_N))
        .unwrap_or(DEFAULT_MAX_N)
}

/// `p` generators squaring to `+1` followed by `q` squaring to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p.saturating_add(q);
        let cap = max_n();
        if n > cap {
            return Err(Error::DimensionCap { n, cap });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `B(e_i, e_i)` for a one-based generator index.
    pub fn square_of(&self, i: usize) -> Result<i8> {
        self.check_index(i)?;
        Ok(if i <= self.p { 1 } else { -1 })
    }

    /// `B(e_i, e_j)` for one-based indices.
    pub fn bilinear(&self, i: usize, j: usize) -> Result<i8> {
        self.check_index(j)?;
        if i == j {
            self.square_of(i)
        } else {
            self.check_index(i)?;
            Ok(0)
        }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::IndexOutOfRange { index: i, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Bit mask of the generators that square to `-1`.
    pub(crate) fn negative_mask(&self) -> u32 {
        let all = if self.n() >= 32 { u32::MAX } else { (1u32 << self.n()) - 1 };
        let pos = if self.p >= 32 { u32::MAX } else { (1u32 << self.p) - 1 };
        all & !pos
    }

    /// All signatures with `p + q <= max_n`, ordered by `n` then `p`.
    pub fn all_up_to(max_n: usize) -> Result<Vec<Signature>> {
        let mut out = Vec::new();
        for n in 0..=max_n {
            for p in 0..=n {
                out.push(Signature::new(p, n - p)?);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_is_diagonal() {
        let s = Signature::new(2, 1).unwrap();
        assert_eq!(s.bilinear(1, 1).unwrap(), 1);
        assert_eq!(s.bilinear(3, 3).unwrap(), -1);
        assert_eq!(s.bilinear(1, 3).unwrap(), 0);
        assert!(s.bilinear(0, 1).is_err());
        assert!(s.square_of(4).is_err());
        assert_eq!(s.negative_mask(), 0b100);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(Signature::new(99, 0), Err(Error::DimensionCap { .. })));
    }

    #[test]
    fn enumerates_45_signatures_to_eight() {
        assert_eq!(Signature::all_up_to(8).unwrap().len(), 45);
    }
}
