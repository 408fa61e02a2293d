//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

/// The base field: arbitrary-precision rationals, always in lowest terms.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}: expected \"p\" or \"p/q\" with q > 0")]
pub struct ParseScalarError(pub String);

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` where `p` is an optionally negative decimal integer
/// and `q` a positive decimal integer. The result is reduced.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let is_int = |s: &str, allow_sign: bool| {
        let digits = if allow_sign { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    if !is_int(num, true) {
        return Err(err());
    }
    let numer: BigInt = num.parse().map_err(|_| err())?;
    match den {
        None => Ok(Scalar::from_integer(numer)),
        Some(d) => {
            if !is_int(d, false) {
                return Err(err());
            }
            let denom: BigInt = d.parse().map_err(|_| err())?;
            if denom.is_zero() {
                return Err(err());
            }
            Ok(Scalar::new(numer, denom))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Total order on rationals by (numerator, denominator), used where a
/// deterministic but field-agnostic preference is needed.
pub fn lex_cmp(a: &Scalar, b: &Scalar) -> Ordering {
    a.numer().cmp(b.numer()).then_with(|| a.denom().cmp(b.denom()))
}

/// Exact square root of a non-negative rational square, if it is one.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_scalar("0/5").unwrap(), zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "1/-2", "+1", "1.5", "a", "1/", "/2", "1/2/3", " 1"] {
            assert!(parse_scalar(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn format_is_reduced() {
        assert_eq!(format_scalar(&frac(4, -6)), "-2/3");
        assert_eq!(format_scalar(&int(7)), "7");
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }
}
