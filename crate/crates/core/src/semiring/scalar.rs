use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// A finite element of the max-plus semiring: an exact rational number.
///
/// `BigRational` keeps values in lowest terms with a positive denominator,
/// so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Tropical sum: `max(self, other)`.
    pub fn oplus(&self, other: &Scalar) -> Scalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product: classical sum.
    pub fn otimes(&self, other: &Scalar) -> Scalar {
        Scalar(&self.0 + &other.0)
    }

    /// Classical division by a positive integer (cycle means, Hilbert halves).
    pub fn div_int(&self, k: i64) -> Scalar {
        Scalar(&self.0 / BigRational::from_integer(BigInt::from(k)))
    }

    /// Classical product (not the tropical one).
    pub fn times(&self, other: &Scalar) -> Scalar {
        Scalar(&self.0 * &other.0)
    }

    pub fn times_int(&self, k: i64) -> Scalar {
        Scalar(&self.0 * BigInt::from(k))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Display-only decimal rendering, trimmed of trailing zeros.
    pub fn to_decimal_string(&self, places: usize) -> String {
        if self.is_integer() {
            return self.to_string();
        }
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        let negative = rounded.is_negative();
        let mag = rounded.abs();
        let int_part = &mag / &scale;
        let frac_part = &mag % &scale;
        let mut frac = format!("{:0>width$}", frac_part.to_string(), width = places);
        while frac.ends_with('0') {
            frac.pop();
        }
        let sign = if negative && !(int_part.is_zero() && frac.is_empty()) {
            "-"
        } else {
            ""
        };
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

fn parse_unsigned_decimal(s: &str) -> Option<BigRational> {
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(numer, denom))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts integers, decimals (`-1.5`) and fractions (`-3/2`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Scalar(s.to_string());
        let t = s.trim();
        let (negative, body) = if let Some(rest) = t.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = t.strip_prefix('\u{2212}') {
            (true, rest)
        } else if let Some(rest) = t.strip_prefix('+') {
            (false, rest)
        } else {
            (false, t)
        };
        let value = match body.split_once('/') {
            Some((n, d)) => {
                let n = parse_unsigned_decimal(n).ok_or_else(bad)?;
                let d = parse_unsigned_decimal(d).ok_or_else(bad)?;
                if d.is_zero() {
                    return Err(bad());
                }
                n / d
            }
            None => parse_unsigned_decimal(body).ok_or_else(bad)?,
        };
        Ok(Scalar(if negative { -value } else { value }))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar(&self.0 + &rhs.0)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar(&self.0 - &rhs.0)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 - rhs.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

/// An element of the extended semiring: a finite scalar or `Bottom` (−∞).
///
/// Variant order makes `Bottom` the least element under the derived `Ord`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtScalar {
    Bottom,
    Finite(Scalar),
}

impl ExtScalar {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            ExtScalar::Bottom => None,
            ExtScalar::Finite(s) => Some(s),
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, ExtScalar::Bottom)
    }
}

impl From<Scalar> for ExtScalar {
    fn from(s: Scalar) -> Self {
        ExtScalar::Finite(s)
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        ExtScalar::Finite(Scalar::from_int(n))
    }
}

impl FromStr for ExtScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-inf" | "\u{2212}inf" | "-\u{221e}" | "\u{2212}\u{221e}" => Ok(ExtScalar::Bottom),
            other => other.parse().map(ExtScalar::Finite),
        }
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Bottom => f.write_str("-inf"),
            ExtScalar::Finite(s) => fmt::Display::fmt(s, f),
        }
    }
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a ⊕ b`: the maximum, with `Bottom` neutral.
pub fn trop_add(a: &ExtScalar, b: &ExtScalar) -> ExtScalar {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// `a ⊗ b`: classical addition, with `Bottom` absorbing.
pub fn trop_mul(a: &ExtScalar, b: &ExtScalar) -> ExtScalar {
    match (a, b) {
        (ExtScalar::Finite(x), ExtScalar::Finite(y)) => ExtScalar::Finite(x.otimes(y)),
        _ => ExtScalar::Bottom,
    }
}
