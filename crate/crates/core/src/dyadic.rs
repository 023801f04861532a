//! Exact dyadic rationals `n / 2^e` with arbitrary-precision numerators.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A reduced dyadic rational `numerator / 2^exponent`.
///
/// The numerator is odd whenever the exponent is positive, and zero is
/// always stored with exponent zero, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        Self::reduced(num.into(), exp)
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { num: BigInt::from(n), exp: 0 }
    }

    /// `1 / 2^e`.
    pub fn half_pow(e: u32) -> Self {
        Dyadic { num: BigInt::one(), exp: e }
    }

    fn reduced(mut num: BigInt, mut exp: u32) -> Self {
        if num.is_zero() {
            return Dyadic { num, exp: 0 };
        }
        if exp > 0 {
            let tz = num.trailing_zeros().unwrap_or(0);
            let shift = tz.min(u64::from(exp)) as u32;
            if shift > 0 {
                num >>= shift as usize;
                exp -= shift;
            }
        }
        Dyadic { num, exp }
    }

    /// Text with the denominator as a power of two: `3`, `-1/2^4`.
    pub fn to_pow2_text(&self) -> String {
        if self.exp == 0 {
            self.num.to_string()
        } else {
            format!("{}/2^{}", self.num, self.exp)
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic { num: self.num.abs(), exp: self.exp }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.exp == 0 {
            self.num.to_i64()
        } else {
            None
        }
    }

    /// Multiply by `2^k` for signed `k`.
    pub fn shl(&self, k: i32) -> Self {
        if k >= 0 {
            let k = k as u32;
            if k <= self.exp {
                Self::reduced(self.num.clone(), self.exp - k)
            } else {
                Self::reduced(&self.num << (k - self.exp) as usize, 0)
            }
        } else {
            Self::reduced(self.num.clone(), self.exp + k.unsigned_abs())
        }
    }

    /// Exact quotient, defined only when it is again dyadic.
    pub fn checked_div(&self, other: &Dyadic) -> Result<Dyadic> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // other = m * 2^t / 2^e with m odd; the quotient is dyadic iff m divides our numerator.
        let tz = other.num.trailing_zeros().unwrap_or(0) as u32;
        let odd = &other.num >> tz as usize;
        let (quot, rem) = self.num.div_rem(&odd);
        if !rem.is_zero() {
            return Err(Error::NotDyadic(format!("{self} / {other}")));
        }
        // self.num/2^se divided by odd*2^tz/2^oe = quot * 2^(oe - se - tz)
        let shift = i64::from(other.exp) - i64::from(self.exp) - i64::from(tz);
        Ok(Dyadic::from_bigint(quot).shl(shift as i32))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    /// Denominator `2^exp` as a big integer.
    pub fn denominator(&self) -> BigInt {
        BigInt::one() << self.exp as usize
    }

    /// `self^k` for non-negative `k`.
    pub fn pow(&self, k: u32) -> Self {
        Dyadic::reduced(self.num.pow(k), self.exp * k)
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl From<i32> for Dyadic {
    fn from(n: i32) -> Self {
        Dyadic::from_int(i64::from(n))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.exp == rhs.exp {
            Dyadic::reduced(&self.num + &rhs.num, self.exp)
        } else if self.exp > rhs.exp {
            let r = &rhs.num << (self.exp - rhs.exp) as usize;
            Dyadic::reduced(&self.num + r, self.exp)
        } else {
            let l = &self.num << (rhs.exp - self.exp) as usize;
            Dyadic::reduced(l + &rhs.num, rhs.exp)
        }
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::reduced(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Dyadic> for Dyadic {
    fn sub_assign(&mut self, rhs: &Dyadic) {
        *self = &*self - rhs;
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| acc + x)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        let l = &self.num << (e - self.exp) as usize;
        let r = &other.num << (e - other.exp) as usize;
        l.cmp(&r)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `n`, `n/d` with `d` a power of two, and `n/2^e`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid dyadic rational `{s}`"));
        let Some((n, d)) = s.split_once('/') else {
            return BigInt::from_str(s).map(Dyadic::from_bigint).map_err(|_| bad());
        };
        let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = d.trim();
        let exp = if let Some(e) = d.strip_prefix("2^") {
            e.parse::<u32>().map_err(|_| bad())?
        } else {
            let den = BigInt::from_str(d).map_err(|_| bad())?;
            if !den.is_positive() {
                return Err(bad());
            }
            let tz = den.trailing_zeros().unwrap_or(0);
            if den != BigInt::one() << tz as usize {
                return Err(Error::NotDyadic(s.to_string()));
            }
            tz as u32
        };
        Ok(Dyadic::new(num, exp))
    }
}
