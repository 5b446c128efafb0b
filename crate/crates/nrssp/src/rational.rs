//! Exact rational scalar used for all times, amounts, and objectives.
//!
//! Everything in this crate is computed over arbitrary-precision rationals so
//! that resource-balance comparisons and the earliest-start search of the list
//! scheduler are exact. There is no floating point anywhere in the core; the
//! only decimal output is an explicitly labeled rendering.
//!
//! The literal grammar, used in files and on the command line, is
//!
//! ```text
//! sign? digits ("/" digits)?    e.g.  "3", "-7/2", "+1/20"
//! sign? digits "." digits       e.g.  "0.05"  (converted exactly to 1/20)
//! ```
//!
//! Values always print in canonical form: a reduced fraction with positive
//! denominator, the denominator omitted when it is 1.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision rational in canonical form (reduced, denominator > 0).
///
/// ```
/// use nrssp::Rational;
///
/// let r: Rational = "0.05".parse().unwrap();
/// assert_eq!(r, Rational::new(1, 20));
/// assert_eq!(r.to_string(), "1/20");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Renders the value to `sig` significant decimal digits (round half away
    /// from zero), e.g. `1318/521` at 12 digits is `"2.52975047985"`.
    ///
    /// This is a labeled rendering for reports; the exact value is what the
    /// `Display` form carries.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        assert!(sig > 0, "need at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();

        let ten = BigInt::from(10);
        // Exponent k with 10^k <= |self| < 10^(k+1).
        let mut k: i64 = 0;
        if num >= den {
            let mut bound = &den * &ten;
            while num >= bound {
                bound *= &ten;
                k += 1;
            }
        } else {
            let mut scaled = &num * &ten;
            k = -1;
            while scaled < den {
                scaled *= &ten;
                k -= 1;
            }
        }

        // Round num/den * 10^(sig-1-k) to an integer, half away from zero.
        let shift = sig as i64 - 1 - k;
        let (n, d) = if shift >= 0 {
            (num * ten.pow(shift as u32), den)
        } else {
            (num, den * ten.pow((-shift) as u32))
        };
        let mut digits = (BigInt::from(2) * &n + &d) / (BigInt::from(2) * &d);
        // Rounding can carry into an extra digit (9.99 -> 10.0).
        if digits.to_string().len() > sig {
            digits /= &ten;
            k += 1;
        }
        let digit_str = digits.to_string();
        debug_assert_eq!(digit_str.len(), sig);

        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if k >= 0 {
            let int_len = (k + 1) as usize;
            if int_len >= sig {
                out.push_str(&digit_str);
                out.push_str(&"0".repeat(int_len - sig));
            } else {
                out.push_str(&digit_str[..int_len]);
                out.push('.');
                out.push_str(&digit_str[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.push_str(&"0".repeat((-k - 1) as usize));
            out.push_str(&digit_str);
        }
        out
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Why a rational literal failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseRationalError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        if body.is_empty() {
            return Err(err("empty literal"));
        }
        let parse_digits = |part: &str, what: &str| -> Result<BigInt, ParseRationalError> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                Err(err(&format!("{what} must be a nonempty digit string")))
            } else {
                Ok(part.parse::<BigInt>().expect("digit string"))
            }
        };
        let value = if let Some((n, d)) = body.split_once('/') {
            let numer = parse_digits(n, "numerator")?;
            let denom = parse_digits(d, "denominator")?;
            if denom.is_zero() {
                return Err(err("denominator must be positive"));
            }
            BigRational::new(numer, denom)
        } else if let Some((int, frac)) = body.split_once('.') {
            let int = parse_digits(int, "integer part")?;
            let frac_digits = frac.len();
            let frac = parse_digits(frac, "fractional part")?;
            let scale = BigInt::from(10).pow(frac_digits as u32);
            BigRational::new(int * &scale + frac, scale)
        } else {
            BigRational::from_integer(parse_digits(body, "integer")?)
        };
        Ok(Rational(value * BigInt::from(sign)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fraction_and_decimal() {
        assert_eq!("1/20".parse::<Rational>().unwrap(), Rational::new(1, 20));
        assert_eq!("0.05".parse::<Rational>().unwrap(), Rational::new(1, 20));
        assert_eq!("-7/2".parse::<Rational>().unwrap(), Rational::new(-7, 2));
        assert_eq!("+3".parse::<Rational>().unwrap(), Rational::from_integer(3));
        assert_eq!(
            "2.50".parse::<Rational>().unwrap(),
            Rational::new(5, 2),
            "trailing zeros are exact"
        );
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        for bad in ["", "-", "1/", "/2", "1.", ".5", "1/0", "1 /2", "a", "1e3", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_is_reduced_fraction() {
        assert_eq!(Rational::new(1318, 400).to_string(), "659/200");
        assert_eq!(Rational::new(-4, 8).to_string(), "-1/2");
        assert_eq!(Rational::new(6, 3).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn canonical_form_after_arithmetic() {
        let r = (Rational::new(1, 6) + Rational::new(1, 3)) * Rational::new(4, 1);
        assert_eq!(r, Rational::from_integer(2));
        assert!(r.denominator().is_one());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(1318, 521).to_decimal_string(12), "2.52975047985");
        assert_eq!(Rational::new(1, 20).to_decimal_string(12), "0.0500000000000");
        assert_eq!(Rational::from_integer(3).to_decimal_string(12), "3.00000000000");
        assert_eq!(Rational::new(-1, 3).to_decimal_string(5), "-0.33333");
        assert_eq!(Rational::new(9995, 1000).to_decimal_string(3), "10.0");
        assert_eq!(Rational::from_integer(123456).to_decimal_string(3), "123000");
    }

    #[test]
    fn serde_round_trip_is_exact() {
        let r = Rational::new(21, 20);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"21/20\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
        assert!(serde_json::from_str::<Rational>("0.05").is_err(), "numbers are rejected");
    }
}
