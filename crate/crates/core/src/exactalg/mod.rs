//! Exact rational scalars, projective points and dense matrices.
//!
//! Every identity checked by this crate is a polynomial identity with integer
//! coefficients, so it is verified exactly over the rationals.

mod matrix;
mod proj;

pub use matrix::{commutator, det, embed_three, kron, mat_mul, Matrix, Slot};
pub use proj::{proj_equal, P2Point, P3Point, P4Point, P8Point, ProjPoint};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics when `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the literal syntax `[+-]digits[/digits]`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let unsigned = num.strip_prefix(['+', '-']).unwrap_or(num);
    if unsigned.is_empty() || !unsigned.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
            d.parse().map_err(|_| err())?
        }
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` rendering, with `/q` omitted for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses a comma separated list of exactly `n` rationals.
pub fn parse_rational_list(s: &str, n: usize) -> Result<Vec<Rational>> {
    let vals = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != n {
        return Err(Error::ParseRational(s.to_string()));
    }
    Ok(vals)
}
