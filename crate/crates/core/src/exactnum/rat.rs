//! Exact rationals with an inline fast path for word-sized values.
//!
//! Almost every coefficient that shows up while expanding trace polynomials
//! is a small integer, so `Rat` keeps numerator and denominator in machine
//! words and only spills to `BigRational` when an operation overflows.
//! The representation is canonical: a value that fits in `i64` is always
//! stored inline, which keeps `Eq` and `Hash` structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    /// `den > 0`, `gcd(num, den) == 1`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number, always reduced with a positive denominator.
#[derive(Clone)]
pub struct Rat(Repr);

#[inline]
fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat(Repr::Small(0, 1));
    pub const ONE: Rat = Rat(Repr::Small(1, 1));

    #[inline]
    pub fn zero() -> Rat {
        Rat::ZERO
    }

    #[inline]
    pub fn one() -> Rat {
        Rat::ONE
    }

    #[inline]
    pub fn from_int(n: i64) -> Rat {
        Rat(Repr::Small(n, 1))
    }

    /// `num / den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128_parts(num as i128, den as i128)
    }

    pub fn from_bigint(n: BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(n))
    }

    pub fn from_big(r: BigRational) -> Rat {
        // BigRational is already reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat(Repr::Small(n, d)),
            _ => Rat(Repr::Big(Box::new(r))),
        }
    }

    fn from_i128_parts(mut n: i128, mut d: i128) -> Rat {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rat::ZERO;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g != 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat(Repr::Small(n, d)),
            _ => Rat(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && !self.is_negative()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small(n, d) => Rat::from_i128_parts(*d as i128, *n as i128),
            Repr::Big(b) => Rat::from_big(b.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn add_ref(&self, other: &Rat) -> Rat {
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => match a.checked_add(*b) {
                Some(s) => Rat(Repr::Small(s, 1)),
                None => Rat::from_i128_parts(*a as i128 + *b as i128, 1),
            },
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                let n = (*an as i128) * (*bd as i128) + (*bn as i128) * (*ad as i128);
                let d = (*ad as i128) * (*bd as i128);
                Rat::from_i128_parts(n, d)
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul_ref(&self, other: &Rat) -> Rat {
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => match a.checked_mul(*b) {
                Some(p) => Rat(Repr::Small(p, 1)),
                None => Rat::from_i128_parts(*a as i128 * *b as i128, 1),
            },
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                let n = (*an as i128) * (*bn as i128);
                let d = (*ad as i128) * (*bd as i128);
                Rat::from_i128_parts(n, d)
            }
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg_ref(&self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rat(Repr::Small(m, *d)),
                None => Rat::from_i128_parts(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }

    /// Least common multiple of the denominators of `values`.
    pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
        let mut l = BigInt::one();
        for v in values {
            let d = v.denom();
            if !d.is_one() {
                l = l.lcm(&d);
            }
        }
        l
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                ((*an as i128) * (*bd as i128)).cmp(&((*bn as i128) * (*ad as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = match d {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n as i64)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_bigint(n)
    }
}

impl From<&BigInt> for Rat {
    fn from(n: &BigInt) -> Rat {
        Rat::from_bigint(n.clone())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            #[inline]
            fn $m(self, rhs: &Rat) -> Rat {
                let f: fn(&Rat, &Rat) -> Rat = $body;
                f(self, rhs)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            #[inline]
            fn $m(self, rhs: Rat) -> Rat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            #[inline]
            fn $m(self, rhs: &Rat) -> Rat {
                (&self).$m(rhs)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            #[inline]
            fn $m(self, rhs: Rat) -> Rat {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.recip()));

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        self.neg_ref()
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        self.neg_ref()
    }
}

impl AddAssign<&Rat> for Rat {
    #[inline]
    fn add_assign(&mut self, rhs: &Rat) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Rat> for Rat {
    #[inline]
    fn add_assign(&mut self, rhs: Rat) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Rat> for Rat {
    #[inline]
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl MulAssign<&Rat> for Rat {
    #[inline]
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |a, b| a * b)
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rat::new(6, -4), Rat::new(-3, 2));
        assert_eq!(Rat::new(0, -7), Rat::zero());
        assert_eq!(Rat::new(0, 5).to_string(), "0");
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let big = Rat::from_int(i64::MAX) + Rat::from_int(i64::MAX);
        assert_eq!(big.to_string(), "18446744073709551614");
        let back = &big - &Rat::from_int(i64::MAX);
        assert_eq!(back, Rat::from_int(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let sq = Rat::from_int(1 << 40) * Rat::from_int(1 << 40);
        assert_eq!(sq / Rat::from_int(1 << 40), Rat::from_int(1 << 40));
    }

    #[test]
    fn parse_and_order() {
        let a: Rat = "21/4".parse().unwrap();
        let b: Rat = "-5/2".parse().unwrap();
        assert!(b < a);
        assert_eq!(&a + &b, Rat::new(11, 4));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn i64_min_negation() {
        let m = Rat::from_int(i64::MIN);
        assert_eq!(-(-m.clone()), m);
    }
}
