//! Exact complex and quaternion scalars used as matrix entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// `re + im·i` with dyadic parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ExactComplex {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl ExactComplex {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        ExactComplex { re, im }
    }

    pub fn i() -> Self {
        ExactComplex::new(Dyadic::zero(), Dyadic::one())
    }

    pub fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> Dyadic {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Zero for ExactComplex {
    fn zero() -> Self {
        ExactComplex::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ExactComplex {
    fn one() -> Self {
        ExactComplex::new(Dyadic::one(), Dyadic::zero())
    }
}

impl Add for ExactComplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ExactComplex::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ExactComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ExactComplex::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for ExactComplex {
    type Output = Self;
    fn neg(self) -> Self {
        ExactComplex::new(-self.re, -self.im)
    }
}

impl Mul for ExactComplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ExactComplex::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

/// `a + b·i + c·j + d·k` with dyadic components and Hamilton's product.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ExactQuaternion {
    pub a: Dyadic,
    pub b: Dyadic,
    pub c: Dyadic,
    pub d: Dyadic,
}

impl ExactQuaternion {
    pub fn new(a: Dyadic, b: Dyadic, c: Dyadic, d: Dyadic) -> Self {
        ExactQuaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        ExactQuaternion::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn real(a: Dyadic) -> Self {
        ExactQuaternion::new(a, Dyadic::zero(), Dyadic::zero(), Dyadic::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn components(&self) -> [&Dyadic; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_imaginary(&self) -> bool {
        self.a.is_zero()
    }

    pub fn scale(&self, s: &Dyadic) -> Self {
        ExactQuaternion::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }
}

/// Hamilton product.
pub fn quat_mul(x: &ExactQuaternion, y: &ExactQuaternion) -> ExactQuaternion {
    let (a1, b1, c1, d1) = (&x.a, &x.b, &x.c, &x.d);
    let (a2, b2, c2, d2) = (&y.a, &y.b, &y.c, &y.d);
    ExactQuaternion::new(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )
}

/// Negates the imaginary part.
pub fn quat_conj(q: &ExactQuaternion) -> ExactQuaternion {
    ExactQuaternion::new(q.a.clone(), -&q.b, -&q.c, -&q.d)
}

/// `a² + b² + c² + d²`.
pub fn quat_norm_sq(q: &ExactQuaternion) -> Dyadic {
    q.components().iter().map(|x| *x * *x).sum()
}

/// `conj(q) / |q|²`, available only when the result stays dyadic.
pub fn quat_inverse(q: &ExactQuaternion) -> Result<ExactQuaternion> {
    let n = quat_norm_sq(q);
    if n.is_zero() {
        return Err(Error::NotInvertible("zero quaternion".into()));
    }
    let c = quat_conj(q);
    Ok(ExactQuaternion::new(c.a.checked_div(&n)?, c.b.checked_div(&n)?, c.c.checked_div(&n)?, c.d.checked_div(&n)?))
}

/// `q ↦ j q j⁻¹ = -j q j`: negates the `i` and `k` parts.
pub fn quat_main_involution(q: &ExactQuaternion) -> ExactQuaternion {
    ExactQuaternion::new(q.a.clone(), -&q.b, q.c.clone(), -&q.d)
}

/// Conjugate of the main involution: fixes `1, i, k` and negates `j`.
pub fn quat_reversion(q: &ExactQuaternion) -> ExactQuaternion {
    quat_conj(&quat_main_involution(q))
}

impl Zero for ExactQuaternion {
    fn zero() -> Self {
        ExactQuaternion::default()
    }
    fn is_zero(&self) -> bool {
        self.components().iter().all(|x| x.is_zero())
    }
}

impl One for ExactQuaternion {
    fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }
}

impl Add for ExactQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ExactQuaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for ExactQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ExactQuaternion::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for ExactQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        ExactQuaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for ExactQuaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        quat_mul(&self, &o)
    }
}

/// The division ring a matrix entry lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Ring {
    Real,
    Complex,
    Quaternion,
}

impl Ring {
    /// Real dimension of the ring.
    pub fn real_dim(self) -> usize {
        match self {
            Ring::Real => 1,
            Ring::Complex => 2,
            Ring::Quaternion => 4,
        }
    }
}

/// A matrix entry tagged with its ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingScalar {
    Real(Dyadic),
    Complex(ExactComplex),
    Quaternion(ExactQuaternion),
}

impl RingScalar {
    pub fn ring(&self) -> Ring {
        match self {
            RingScalar::Real(_) => Ring::Real,
            RingScalar::Complex(_) => Ring::Complex,
            RingScalar::Quaternion(_) => Ring::Quaternion,
        }
    }

    pub fn zero(ring: Ring) -> Self {
        match ring {
            Ring::Real => RingScalar::Real(Dyadic::zero()),
            Ring::Complex => RingScalar::Complex(ExactComplex::zero()),
            Ring::Quaternion => RingScalar::Quaternion(ExactQuaternion::zero()),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: Ring, v: i64) -> Self {
        Self::from_components(ring, &[v.into()]).expect("a single real component always fits")
    }

    /// Build from up to `real_dim` components along `1, i, j, k`; missing ones are zero.
    pub fn from_components(ring: Ring, c: &[Dyadic]) -> Result<Self> {
        if c.len() > ring.real_dim() {
            return Err(Error::FoldFailure(format!("{} components do not fit {:?}", c.len(), ring)));
        }
        let get = |i: usize| c.get(i).cloned().unwrap_or_else(Dyadic::zero);
        Ok(match ring {
            Ring::Real => RingScalar::Real(get(0)),
            Ring::Complex => RingScalar::Complex(ExactComplex::new(get(0), get(1))),
            Ring::Quaternion => RingScalar::Quaternion(ExactQuaternion::new(get(0), get(1), get(2), get(3))),
        })
    }

    /// Components along `1, i, j, k`, padded to four.
    pub fn components(&self) -> [Dyadic; 4] {
        let z = Dyadic::zero;
        match self {
            RingScalar::Real(a) => [a.clone(), z(), z(), z()],
            RingScalar::Complex(c) => [c.re.clone(), c.im.clone(), z(), z()],
            RingScalar::Quaternion(q) => [q.a.clone(), q.b.clone(), q.c.clone(), q.d.clone()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(Zero::is_zero)
    }

    fn as_quat(&self) -> ExactQuaternion {
        let [a, b, c, d] = self.components();
        ExactQuaternion::new(a, b, c, d)
    }

    fn tag_check(&self, o: &Self) -> Result<Ring> {
        if self.ring() != o.ring() {
            return Err(Error::TagMismatch(format!("{:?} vs {:?}", self.ring(), o.ring())));
        }
        Ok(self.ring())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let r = self.tag_check(o)?;
        let sum = self.as_quat() + o.as_quat();
        Self::from_components(r, &[sum.a, sum.b, sum.c, sum.d][..r.real_dim()])
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let r = self.tag_check(o)?;
        // Complex and real products are the restrictions of the Hamilton product.
        let p = quat_mul(&self.as_quat(), &o.as_quat());
        Self::from_components(r, &[p.a, p.b, p.c, p.d][..r.real_dim()])
    }

    pub fn neg(&self) -> Self {
        match self {
            RingScalar::Real(a) => RingScalar::Real(-a),
            RingScalar::Complex(c) => RingScalar::Complex(-c.clone()),
            RingScalar::Quaternion(q) => RingScalar::Quaternion(-q.clone()),
        }
    }

    /// True for `0, ±1, ±i, ±j, ±k`.
    pub fn is_unit_alphabet(&self) -> bool {
        let c = self.components();
        let nonzero: Vec<&Dyadic> = c.iter().filter(|x| !x.is_zero()).collect();
        match nonzero.as_slice() {
            [] => true,
            [x] => x.abs().is_one(),
            _ => false,
        }
    }

    /// Compact text: `0`, `1`, `-i`, `1/2+j`, ...
    pub fn to_text(&self) -> String {
        let c = self.components();
        let mut out = String::new();
        for (v, unit) in c.iter().zip(["", "i", "j", "k"]) {
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = v.abs();
            if unit.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(unit);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parse an alphabet entry such as `-k` in the given ring.
    pub fn parse(ring: Ring, s: &str) -> Result<Self> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let slot = match body.chars().last() {
            Some('i') => 1,
            Some('j') => 2,
            Some('k') => 3,
            _ => 0,
        };
        let mag_text = if slot == 0 { body } else { &body[..body.len() - 1] };
        let mag = if mag_text.is_empty() { Dyadic::one() } else { mag_text.parse::<Dyadic>()? };
        let mut comps = vec![Dyadic::zero(); 4];
        comps[slot] = if neg { -mag } else { mag };
        if slot >= ring.real_dim() {
            return Err(Error::TagMismatch(format!("entry `{s}` is not in {ring:?}")));
        }
        comps.truncate(ring.real_dim());
        Self::from_components(ring, &comps)
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
