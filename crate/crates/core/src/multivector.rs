//! Sparse exact multivectors and the geometric product.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::blade::{product_sign, Blade};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::signature::Signature;

/// A linear combination of canonical blades with dyadic coefficients.
///
/// Terms are kept in canonical blade order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, Dyadic>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Dyadic::one())
    }

    pub fn scalar(sig: Signature, c: Dyadic) -> Self {
        Self::term(sig, Blade::SCALAR, c)
    }

    fn term(sig: Signature, b: Blade, c: Dyadic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(b, c);
        }
        Multivector { sig, terms }
    }

    pub fn from_blade(sig: Signature, b: Blade) -> Result<Self> {
        b.check(sig)?;
        Ok(Self::term(sig, b, Dyadic::one()))
    }

    pub fn from_blade_coeff(sig: Signature, b: Blade, c: Dyadic) -> Result<Self> {
        b.check(sig)?;
        Ok(Self::term(sig, b, c))
    }

    /// `γ_i` for a one-based index.
    pub fn generator(sig: Signature, i: usize) -> Result<Self> {
        sig.check_index(i)?;
        Self::from_blade(sig, Blade::generator(i)?)
    }

    /// Build from `(blade, coefficient)` pairs, summing repeats.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, Dyadic)>) -> Result<Self> {
        let mut acc: BTreeMap<Blade, Dyadic> = BTreeMap::new();
        for (b, c) in terms {
            b.check(sig)?;
            let slot = acc.entry(b).or_insert_with(Dyadic::zero);
            *slot += &c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Multivector { sig, terms: acc })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Terms in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Dyadic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: Blade) -> Dyadic {
        self.terms.get(&b).cloned().unwrap_or_else(Dyadic::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value if every non-scalar coefficient vanishes.
    pub fn as_scalar(&self) -> Option<Dyadic> {
        match self.terms.len() {
            0 => Some(Dyadic::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    pub fn scalar_part(&self) -> Dyadic {
        self.coefficient(Blade::SCALAR)
    }

    /// The single blade and coefficient of a monomial.
    pub fn as_monomial(&self) -> Option<(Blade, &Dyadic)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(b, c)| (*b, c))
        } else {
            None
        }
    }

    /// Leading blade in canonical order.
    pub fn first_blade(&self) -> Option<Blade> {
        self.terms.keys().next().copied()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            Err(Error::SignatureMismatch { left: self.sig, right: other.sig })
        } else {
            Ok(())
        }
    }

    /// Geometric product, erroring on signature mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.gp(other))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.combine(other, true))
    }

    fn gp(&self, other: &Self) -> Self {
        let neg = self.sig.negative_mask();
        let mut acc: HashMap<u32, Dyadic> = HashMap::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let s = product_sign(a.mask(), b.mask(), neg);
                let c = ca * cb;
                let slot = acc.entry(a.mask() ^ b.mask()).or_insert_with(Dyadic::zero);
                if s > 0 {
                    *slot += &c;
                } else {
                    *slot -= &c;
                }
            }
        }
        let terms =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (Blade::from_mask(m), c)).collect();
        Multivector { sig: self.sig, terms }
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let mut terms = self.terms.clone();
        for (b, c) in &other.terms {
            let slot = terms.entry(*b).or_insert_with(Dyadic::zero);
            if subtract {
                *slot -= c;
            } else {
                *slot += c;
            }
            if slot.is_zero() {
                terms.remove(b);
            }
        }
        Multivector { sig: self.sig, terms }
    }

    pub fn scale(&self, c: &Dyadic) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig);
        }
        let terms = self.terms.iter().map(|(b, x)| (*b, x * c)).collect();
        Multivector { sig: self.sig, terms }
    }

    /// Multiply every coefficient by `2^k`.
    pub fn shl(&self, k: i32) -> Self {
        let terms = self.terms.iter().map(|(b, x)| (*b, x.shl(k))).collect();
        Multivector { sig: self.sig, terms }
    }

    /// Keep only the terms of grade `k`; out-of-range grades give zero.
    pub fn grade_project(&self, k: usize) -> Self {
        let terms = self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())).collect();
        Multivector { sig: self.sig, terms }
    }

    /// Scale each term by a sign depending only on its blade.
    pub fn map_signs(&self, f: impl Fn(Blade) -> i8) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, if f(*b) < 0 { -c } else { c.clone() }))
            .collect();
        Multivector { sig: self.sig, terms }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 1)
    }

    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| b.grade() == 1)
    }

    /// Canonical text form, for example `1/2 + 1/2 g124`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parse the canonical text form in the given signature.
    pub fn parse(sig: Signature, s: &str) -> Result<Self> {
        parse_terms(s)?.into_iter().try_fold(Self::zero(sig), |acc, (b, c)| {
            let t = Self::from_blade_coeff(sig, b, c)?;
            Ok(acc.combine(&t, false))
        })
    }
}

fn parse_terms(s: &str) -> Result<Vec<(Blade, Dyadic)>> {
    let bad = |why: &str| Error::Parse(format!("{why} in multivector `{s}`"));
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut first = true;
    loop {
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        if i >= chars.len() {
            break;
        }
        let mut negative = false;
        if chars[i] == '+' || chars[i] == '-' {
            negative = chars[i] == '-';
            i += 1;
        } else if !first {
            return Err(bad("missing operator"));
        }
        first = false;
        let start = i;
        let mut depth = 0usize;
        while i < chars.len() {
            match chars[i] {
                '{' => depth += 1,
                '}' => depth = depth.saturating_sub(1),
                '+' | '-' if depth == 0 => break,
                _ => {}
            }
            i += 1;
        }
        let body: String = chars[start..i].iter().collect();
        let body = body.trim();
        if body.is_empty() {
            return Err(bad("empty term"));
        }
        let (coef, blade) = match body.find('g') {
            Some(pos) => {
                let c = body[..pos].trim().trim_end_matches('*').trim();
                let c = if c.is_empty() { Dyadic::one() } else { c.parse::<Dyadic>()? };
                (c, body[pos..].parse::<Blade>()?)
            }
            None => (body.parse::<Dyadic>()?, Blade::SCALAR),
        };
        out.push((blade, if negative { -coef } else { coef }));
    }
    if out.is_empty() {
        return Err(bad("no terms"));
    }
    Ok(out)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if b.is_scalar() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag} {b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Cl{}", self, self.sig)
    }
}

/// Operators panic on signature mismatch; use the `try_*` methods to get an error instead.
impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.try_mul(rhs).expect("geometric product of multivectors with different signatures")
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("sum of multivectors with different signatures")
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("difference of multivectors with different signatures")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map_signs(|_| -1)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        (&self).neg()
    }
}

/// Geometric product as a free function.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_mul(b)
}

/// Grade projection as a free function.
pub fn grade_project(a: &Multivector, k: usize) -> Multivector {
    a.grade_project(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }
    fn mv(s: Signature, t: &str) -> Multivector {
        Multivector::parse(s, t).unwrap()
    }

    #[test]
    fn pseudoscalar_square_in_cl03() {
        let s = sig(0, 3);
        assert_eq!(&mv(s, "g123") * &mv(s, "g123"), Multivector::one(s));
    }

    #[test]
    fn bivector_square_in_cl02() {
        let s = sig(0, 2);
        assert_eq!(&mv(s, "g12") * &mv(s, "g12"), mv(s, "-1"));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Multivector::one(sig(1, 0));
        let b = Multivector::one(sig(0, 1));
        assert!(matches!(a.try_mul(&b), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn grade_projection() {
        let s = sig(2, 0);
        assert_eq!(mv(s, "1 + g1 + g12").grade_project(1), mv(s, "g1"));
        assert_eq!((&mv(s, "g12") * &mv(s, "g2")).grade_project(1), mv(s, "g1"));
        assert!(mv(s, "g1").grade_project(7).is_zero());
    }

    #[test]
    fn text_format() {
        let s = sig(3, 1);
        let x = mv(s, "1/2 + 1/2 g124");
        assert_eq!(x.to_string(), "1/2 + 1/2 g124");
        assert_eq!(mv(s, "-g1 + 3/2^2 g23 - 1/4").to_string(), "-1/4 - g1 + 3/4 g23");
        assert_eq!(mv(s, "g1 - g1").to_string(), "0");
        assert_eq!(mv(s, "0"), Multivector::zero(s));
        assert!(Multivector::parse(s, "g5").is_err());
        assert!(Multivector::parse(s, "g1 g2").is_err());
        assert!(Multivector::parse(s, "").is_err());
        let big = sig(0, 12);
        assert_eq!(mv(big, "2 g{1,10,12}").to_string(), "2 g{1,10,12}");
    }
}
