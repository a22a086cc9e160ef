//! Scalar abstraction for the approximation parameters.
//!
//! Everything combinatorial works on integers; only the error parameter,
//! its derived `delta`, and the ratio bounds are fractional. Those are kept
//! generic so the same pipeline runs with exact rationals (the default) or
//! with `f64` for quick experiments.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serializer};

pub trait Scalar:
    Num + Clone + Debug + Display + PartialOrd + FromPrimitive + Send + Sync + 'static
{
    /// Parses `"3"`, `"0.25"` or `"1/4"`.
    fn parse_scalar(text: &str) -> Option<Self>;

    /// Largest integer not above `self`, clamped to `0..=u64::MAX`.
    fn floor_u64(&self) -> u64;

    /// Smallest integer not below `self`, clamped to `0..=u64::MAX`.
    fn ceil_u64(&self) -> u64;

    fn to_f64(&self) -> f64;

    fn of_u64(value: u64) -> Self {
        <Self as FromPrimitive>::from_u64(value).expect("u64 is representable")
    }

    fn ratio(num: u64, den: u64) -> Self {
        <Self as Scalar>::of_u64(num) / <Self as Scalar>::of_u64(den)
    }

    fn pow_u32(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    fn parse_scalar(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((n, d)) => {
                let n: f64 = n.trim().parse().ok()?;
                let d: f64 = d.trim().parse().ok()?;
                (d != 0.0).then(|| n / d)
            }
            None => f64::from_str(text).ok(),
        }
    }

    fn floor_u64(&self) -> u64 {
        // `as` saturates and maps NaN to 0.
        self.floor() as u64
    }

    fn ceil_u64(&self) -> u64 {
        self.ceil() as u64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn parse_scalar(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.contains('/') {
            let value = BigRational::from_str(text).ok()?;
            return Some(value);
        }
        let (negative, digits) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let mantissa = BigInt::from_str(&format!("0{int_part}{frac_part}")).ok()?;
        let scale = num_traits::pow(BigInt::from(10u32), frac_part.len());
        let value = BigRational::new(mantissa, scale);
        Some(if negative { -value } else { value })
    }

    fn floor_u64(&self) -> u64 {
        clamp_bigint(&self.floor().to_integer())
    }

    fn ceil_u64(&self) -> u64 {
        clamp_bigint(&self.ceil().to_integer())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

fn clamp_bigint(value: &BigInt) -> u64 {
    if value.is_negative() || value.is_zero() {
        0
    } else {
        value.to_u64().unwrap_or(u64::MAX)
    }
}

/// `1 + x` without caring which scalar backs it.
pub(crate) fn one_plus<S: Scalar>(x: &S) -> S {
    S::one() + x.clone()
}

/// Serde helpers storing a scalar as its display string.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Scalar, Ser: Serializer>(value: &S, ser: Ser) -> Result<Ser::Ok, Ser::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, S: Scalar, D: Deserializer<'de>>(de: D) -> Result<S, D::Error> {
        let text = String::deserialize(de)?;
        S::parse_scalar(&text).ok_or_else(|| de::Error::custom(format!("invalid scalar `{text}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_decimal_and_fraction_forms() {
        assert_eq!(BigRational::parse_scalar("0.05"), Some(rat(1, 20)));
        assert_eq!(BigRational::parse_scalar("1/2"), Some(rat(1, 2)));
        assert_eq!(BigRational::parse_scalar("1"), Some(rat(1, 1)));
        assert_eq!(BigRational::parse_scalar(".5"), Some(rat(1, 2)));
        assert_eq!(BigRational::parse_scalar("abc"), None);
        assert_eq!(f64::parse_scalar("1/4"), Some(0.25));
        assert_eq!(f64::parse_scalar("0.5"), Some(0.5));
    }

    #[test]
    fn floor_and_ceil_clamp() {
        assert_eq!(rat(7, 2).floor_u64(), 3);
        assert_eq!(rat(7, 2).ceil_u64(), 4);
        assert_eq!(rat(-1, 2).ceil_u64(), 0);
        assert_eq!(1e30f64.floor_u64(), u64::MAX);
        assert_eq!(<BigRational as Scalar>::ratio(3, 4), rat(3, 4));
    }

    #[test]
    fn pow_matches_repeated_product() {
        assert_eq!(rat(11, 10).pow_u32(4), rat(14641, 10000));
        assert_eq!(Scalar::pow_u32(&2.0f64, 10), 1024.0);
    }
}
