use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction with arbitrary-precision parts. Always stored reduced with
/// a positive denominator.
pub type Rational = BigRational;

/// Builds the reduced fraction `p/q`.
pub fn rat(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let q = q.into();
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(p.into(), q))
}

/// Text form `p/q`, or `p` for integers.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Parses `p`, `-p`, `p/q` or `-p/q` (decimal digits, no spaces).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.into());
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::parse_bytes(s.as_bytes(), 10).ok_or_else(bad)
    };
    let mut numer = digits(num)?;
    if negative {
        numer = -numer;
    }
    let denom = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    rat(numer, denom)
}

/// Rescales a rational vector to the shortest integer vector on the same
/// ray whose first nonzero entry is positive. The zero vector is returned
/// unchanged.
pub fn normalize_integer_vector(values: &[Rational]) -> Vec<Rational> {
    let Some(first) = values.iter().find(|v| !v.is_zero()) else {
        return values.to_vec();
    };
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let mut gcd = scaled
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if first.is_negative() {
        gcd = -gcd;
    }
    scaled
        .into_iter()
        .map(|v| Rational::from_integer(v / &gcd))
        .collect()
}
