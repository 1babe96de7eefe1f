//! Helpers for exact rationals: `p/q` parsing and formatting, dyadic
//! constructors, and one-sided square-root enclosures.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `2^-k`
pub fn pow2_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

/// Parses `p/q` or a plain integer. Decimal notation is rejected so that
/// no input is ever silently rounded.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        if t.is_empty() || !t.trim_start_matches(['-', '+']).chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Formats as `p/q` (always with a denominator, so output is unambiguous).
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Smallest dyadic rational `m / 2^bits` that is `>= x`.
pub fn ceil_dyadic(x: f64, bits: u32) -> BigRational {
    let scaled = (x * 2f64.powi(bits as i32)).ceil();
    let numer = BigInt::from(scaled as i128);
    BigRational::new(numer, BigInt::one() << bits)
}

/// Rational `u >= sqrt(m)` with `u - sqrt(m) <= 2^-bits`; exact when `m`
/// is a perfect square.
pub fn sqrt_upper(m: &BigUint, bits: u32) -> BigRational {
    let r = m.sqrt();
    if &(&r * &r) == m {
        return BigRational::from_integer(BigInt::from(r));
    }
    let scaled: BigUint = m << (2 * bits);
    let s = scaled.sqrt() + BigUint::one();
    BigRational::new(BigInt::from(s), BigInt::one() << bits)
}
