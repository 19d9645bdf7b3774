//! Exact rational scalar used by the closed forms and the density polynomial.
//!
//! Backed by `num_rational::BigRational`, which keeps values reduced with a
//! positive denominator.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?}")]
    BadInteger(String),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
}

/// Parses `"p/q"`, a plain integer `"p"`, or a decimal like `"1.1"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::BadInteger(num.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::BadInteger(den.to_string()))?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse()
                .map_err(|_| ParseRationalError::BadInteger(int.to_string()))?
        };
        let f: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse()
                .map_err(|_| ParseRationalError::BadInteger(frac.to_string()))?
        };
        if f.is_negative() {
            return Err(ParseRationalError::BadInteger(frac.to_string()));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Rational::new(i * &scale + BigInt::from(sign) * f, scale));
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(s.to_string()))?;
    Ok(Rational::from(n))
}

/// Decimal rendering with `digits` places after the point, truncated toward
/// zero. Exact when the expansion terminates within `digits`.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let int = &scaled / &scale;
    let frac = &scaled % &scale;
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>width$}", width = digits)
    }
}

/// `"p/q"` form (or `"p"` when integral).
pub fn to_fraction_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_ints(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("13/1024").unwrap(), rational_from_ints(13, 1024));
        assert_eq!(parse_rational("2").unwrap(), rational_from_ints(2, 1));
        assert_eq!(parse_rational("1.1").unwrap(), rational_from_ints(11, 10));
        assert_eq!(parse_rational("-0.25").unwrap(), rational_from_ints(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_rendering() {
        let r = rational_from_ints(13, 1024);
        assert_eq!(to_decimal_string(&r, 10), "0.0126953125");
        assert_eq!(to_decimal_string(&rational_from_ints(-1, 3), 5), "-0.33333");
        assert_eq!(to_fraction_string(&r), "13/1024");
        assert_eq!(to_fraction_string(&rational_from_ints(4, 2)), "2");
    }
}
