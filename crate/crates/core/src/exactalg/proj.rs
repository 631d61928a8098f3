use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A point of `CP^(N-1)` in canonical homogeneous coordinates.
///
/// The stored representative is an integer vector with content 1 whose first
/// nonzero entry is positive, so two points are projectively equal exactly
/// when their representatives are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint<const N: usize> {
    coords: [Rational; N],
}

pub type P2Point = ProjPoint<3>;
pub type P3Point = ProjPoint<4>;
pub type P4Point = ProjPoint<5>;
/// Point of `CP^8` ordered `(z00, z01, z02, z10, z11, z12, z20, z21, z22)`.
pub type P8Point = ProjPoint<9>;

impl<const N: usize> ProjPoint<N> {
    pub fn new(coords: [Rational; N]) -> Result<Self> {
        Ok(Self {
            coords: canonicalize(&coords)?.try_into().expect("length preserved"),
        })
    }

    pub fn from_slice(coords: &[Rational]) -> Result<Self> {
        let arr: [Rational; N] = coords.to_vec().try_into().map_err(|v: Vec<Rational>| {
            Error::DimensionMismatch(format!("expected {} coordinates, got {}", N, v.len()))
        })?;
        Self::new(arr)
    }

    pub fn from_i64(coords: [i64; N]) -> Result<Self> {
        Self::new(coords.map(super::int))
    }

    pub fn coords(&self) -> &[Rational; N] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// Colon-separated rendering, e.g. `1:1:1:-1:-1`.
    pub fn to_colon_string(&self) -> String {
        self.coords
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(":")
    }
}

impl<const N: usize> fmt::Debug for ProjPoint<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_colon_string())
    }
}

impl<const N: usize> fmt::Display for ProjPoint<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_colon_string())
    }
}

fn canonicalize(coords: &[Rational]) -> Result<Vec<Rational>> {
    let lead = coords.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let den = coords.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = coords.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if lead.is_negative() {
        content = -content;
    }
    Ok(ints
        .into_iter()
        .map(|x| Rational::from_integer(x / &content))
        .collect())
}

/// Projective equality of two coordinate vectors: `p_i q_j = p_j q_i` for all
/// `i, j`. Both vectors must be nonzero and of equal length.
pub fn proj_equal(p: &[Rational], q: &[Rational]) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(format!(
            "projective points of length {} and {}",
            p.len(),
            q.len()
        )));
    }
    if p.iter().all(Zero::is_zero) || q.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if &p[i] * &q[j] != &p[j] * &q[i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
