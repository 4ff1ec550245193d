//! The scalar field: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already maintains the invariants the rest of
//! the crate relies on (always in lowest terms, denominator positive, value
//! equality), so it is used directly. This module adds the string form used
//! by every file format: `"p/q"` or a plain integer, never floating point.

use crate::error::CkError;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Shorthand for small literal fractions in code and tests.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for small literal integers.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` with optional sign. Rejects zero denominators and
/// anything that is not an exact integer fraction.
pub fn parse_rational(s: &str) -> Result<Rational, CkError> {
    let bad = |reason: &str| CkError::InvalidRational {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty string"));
    }
    match t.split_once('/') {
        None => {
            let n = BigInt::from_str(t).map_err(|_| bad("not an integer"))?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let n = BigInt::from_str(p.trim()).map_err(|_| bad("bad numerator"))?;
            let d = BigInt::from_str(q.trim()).map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical string form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Sign as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("3/-4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational(" -2 ").unwrap(), rat_int(-2));
    }

    #[test]
    fn rejects_zero_denominator_and_junk() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn canonical_string_form() {
        assert_eq!(format_rational(&rat(6, 8)), "3/4");
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat_int(0)), "0");
    }

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let r = rat(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
