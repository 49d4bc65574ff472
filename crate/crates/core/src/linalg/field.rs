//! Exact scalars: arbitrary-precision rationals and prime fields `GF(p)`.
//!
//! Elements carry their field so that mixing fields is caught. The checked
//! `try_*` methods report a mismatch as an error; the operator impls on
//! references panic instead and are meant for code paths where every operand
//! was produced from the same [`FieldSpec`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted prime modulus; products of two residues fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Fails unless the characteristic is 0 or exceeds `degree`.
    pub fn check_characteristic(&self, degree: usize) -> Result<()> {
        match self {
            FieldSpec::Prime(p) if *p <= degree as u64 => Err(Error::Characteristic { characteristic: *p, degree }),
            _ => Ok(()),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(v.into())),
            FieldSpec::Prime(p) => FieldElement::Residue { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(v.into())),
            FieldSpec::Prime(p) => FieldElement::Residue { value: v % p, modulus: p },
        }
    }

    fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldElement::Residue { value: r.to_u64().expect("residue fits"), modulus: p }
            }
        }
    }

    /// `num / den`; fails if `den` vanishes in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement> {
        let d = self.from_i64(den).inverse()?;
        Ok(&self.from_i64(num) * &d)
    }

    /// Parses a decimal integer or fraction such as `-3` or `5/6`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid field element `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        let inv = self.from_bigint(&den).inverse()?;
        Ok(&self.from_bigint(&num) * &inv)
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gfp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" || s == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        let p =
            s.strip_prefix("gfp:").ok_or_else(|| Error::Parse(format!("field must be `q` or `gfp:P`, got `{s}`")))?;
        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("invalid modulus `{p}`")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A scalar in canonical form: reduced fraction with positive denominator, or
/// a residue in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rationals,
            FieldElement::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * other)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Residue { value, modulus } => {
                FieldElement::Residue { value: mod_pow(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(num_traits::pow(r.clone(), exp as usize)),
            FieldElement::Residue { value, modulus } => {
                FieldElement::Residue { value: mod_pow(*value, exp as u64, *modulus), modulus: *modulus }
            }
        }
    }

    /// Residue value for prime fields.
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldElement::Residue { value, .. } => Some(*value),
            FieldElement::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Residue { .. } => None,
        }
    }

    fn is_negative_rational(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_negative())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $res:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            #[allow(clippy::suspicious_arithmetic_impl)]
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match (self, rhs) {
                    (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational($rat(a, b)),
                    (
                        FieldElement::Residue { value: a, modulus: p },
                        FieldElement::Residue { value: b, modulus: q },
                    ) if p == q => FieldElement::Residue { value: $res(*a, *b, *p), modulus: *p },
                    (a, b) => panic!("field mismatch: {} vs {}", a.field(), b.field()),
                }
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| a * b % p);

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Residue { value, modulus } => {
                FieldElement::Residue { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Writes `c*` before a monomial, `-` for negative rationals and nothing for 1.
pub(crate) fn coefficient_prefix(c: &FieldElement, first: bool) -> (String, bool) {
    let negative = c.is_negative_rational();
    let abs = if negative { -c } else { c.clone() };
    let sign = match (first, negative) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    (format!("{sign}{}", if abs.is_one() { String::new() } else { format!("{abs}*") }), abs.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_ops() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(&f.from_i64(3) * &f.from_i64(5), f.one());
        let g = FieldSpec::prime(5).unwrap();
        assert_eq!(g.from_i64(2).inverse().unwrap(), g.from_i64(3));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn rational_ops() {
        let q = FieldSpec::Rationals;
        let a = q.from_ratio(1, 2).unwrap();
        let b = q.from_ratio(1, 3).unwrap();
        assert_eq!(&a + &b, q.from_ratio(5, 6).unwrap());
        assert_eq!(q.from_ratio(2, -4).unwrap(), q.from_ratio(-1, 2).unwrap());
        assert_eq!(q.parse_element("-10/4").unwrap().to_string(), "-5/2");
    }

    #[test]
    fn errors() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.zero().inverse(), Err(Error::DivisionByZero));
        let q = FieldSpec::Rationals;
        assert!(matches!(f.one().try_add(&q.one()), Err(Error::FieldMismatch(..))));
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
        assert!(f.from_ratio(1, 7).is_err());
    }

    #[test]
    fn parse_spec() {
        assert_eq!("gfp:32003".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(32003));
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("gfp:4".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn characteristic_check() {
        assert!(FieldSpec::Prime(7).check_characteristic(6).is_ok());
        assert!(FieldSpec::Prime(7).check_characteristic(7).is_err());
        assert!(FieldSpec::Rationals.check_characteristic(1000).is_ok());
    }
}
