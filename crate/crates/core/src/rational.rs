//! Exact rational scalars and their string form.
//!
//! Every numeric quantity in this crate is a [`Rat`]: an arbitrary-precision
//! fraction, always reduced, with a positive denominator. The interchange
//! string form is `"p/q"`, or just `"p"` when the denominator is 1, with the
//! sign on the numerator; `Display` on `Rat` produces exactly that, and
//! [`parse_rational`] is the strict inverse.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Rat = BigRational;

/// Small-fraction constructor, mostly for tables and tests.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("denominator in `{0}` must be a positive integer")]
    BadDenominator(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parse `"p"` or `"p/q"` with `q > 0`; the sign, if any, sits on `p`.
pub fn parse_rational(s: &str) -> Result<Rat, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (numer, denom) = match s.split_once('/') {
        None => (s, None),
        Some((n, d)) => (n, Some(d)),
    };
    let n: BigInt = numer
        .parse()
        .map_err(|_| RationalParseError::BadInteger(numer.to_string()))?;
    let d: BigInt = match denom {
        None => BigInt::from(1),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(RationalParseError::BadDenominator(s.to_string()));
            }
            d.parse()
                .map_err(|_| RationalParseError::BadInteger(d.to_string()))?
        }
    };
    if d == BigInt::from(0) {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_interchange_form() {
        assert_eq!(rat(9, 8).to_string(), "9/8");
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
        assert_eq!(rat(1, -2).to_string(), "-1/2");
        assert_eq!(rat(7, 1).to_string(), "7");
        assert_eq!(rat(0, 5).to_string(), "0");
        assert_eq!(rat(6, 4).to_string(), "3/2");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "1", "-1", "9/8", "-73/64", "1234567890123456789013/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            parse_rational("3/0"),
            Err(RationalParseError::ZeroDenominator("3/0".into()))
        );
        assert_eq!(parse_rational(""), Err(RationalParseError::Empty));
        assert!(matches!(
            parse_rational("1/-2"),
            Err(RationalParseError::BadDenominator(_))
        ));
        assert!(matches!(
            parse_rational("x/2"),
            Err(RationalParseError::BadInteger(_))
        ));
        assert!(matches!(
            parse_rational("1/2/3"),
            Err(RationalParseError::BadInteger(_))
        ));
        assert!(matches!(
            parse_rational("1.5"),
            Err(RationalParseError::BadInteger(_))
        ));
    }
}
