//! Three-parameter solution of the Yang-Baxter triple, its specialization to
//! the divisor `Y` (the standard one-parameter family on a quadric `D`), and
//! the group law on `D`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{embed_three, Matrix, Rational, Slot};
use crate::vertex::{
    lax_matrix, quadric_d, solve_r_ratios, ybe_residual_r, Delta, RWeights, Weights,
};

/// Affine coordinates `(mu1, mu2, mu3)` on the threefold X.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpectralTriple {
    pub mu1: Rational,
    pub mu2: Rational,
    pub mu3: Rational,
}

impl SpectralTriple {
    pub fn new(mu1: Rational, mu2: Rational, mu3: Rational) -> Self {
        Self { mu1, mu2, mu3 }
    }

    pub fn from_i64(mu1: i64, mu2: i64, mu3: i64) -> Self {
        use crate::exactalg::int;
        Self::new(int(mu1), int(mu2), int(mu3))
    }

    /// The exchange `mu1 <-> mu3` relating single- and double-prime weights.
    pub fn swapped(&self) -> Self {
        Self::new(self.mu3.clone(), self.mu2.clone(), self.mu1.clone())
    }

    /// `mu1 - mu3 - mu1 mu2 + mu1 mu3`, denominator of the Lax weights.
    pub fn lax_denominator(&self) -> Rational {
        let (m1, m2, m3) = (&self.mu1, &self.mu2, &self.mu3);
        m1 - m3 - m1 * m2 + m1 * m3
    }

    /// `mu1 - mu3 - mu1 mu3 + mu2 mu3`, the extra denominator of the R-weights
    /// (the negated Lax denominator of the swapped triple).
    pub fn r_denominator(&self) -> Rational {
        let (m1, m2, m3) = (&self.mu1, &self.mu2, &self.mu3);
        m1 - m3 - m1 * m3 + m2 * m3
    }

    /// Both denominators nonzero, so Lax, double-prime and R weights exist.
    pub fn is_admissible(&self) -> bool {
        !self.lax_denominator().is_zero() && !self.r_denominator().is_zero()
    }
}

/// Parameters `(t1, t2, q)` of the divisor `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorParams {
    pub t1: Rational,
    pub t2: Rational,
    pub q: Rational,
}

impl DivisorParams {
    pub fn new(t1: Rational, t2: Rational, q: Rational) -> Self {
        Self { t1, t2, q }
    }

    pub fn from_i64(t1: i64, t2: i64, q: i64) -> Self {
        use crate::exactalg::int;
        Self::new(int(t1), int(t2), int(q))
    }

    /// Checks `q ∉ {0, ±1}` and the specialization denominators, naming the
    /// first violated condition.
    pub fn validate(&self) -> Result<()> {
        let one = Rational::one();
        let (t1, t2, q) = (&self.t1, &self.t2, &self.q);
        let checks = [
            ("q", q.clone()),
            ("q - 1", q - &one),
            ("q + 1", q + &one),
            ("t1 + q", t1 + q),
            ("t2 + q", t2 + q),
            ("t1 - 1", t1 - &one),
            ("t2 - 1", t2 - &one),
        ];
        for (name, v) in checks {
            if v.is_zero() {
                return Err(Error::DegenerateDenominator(name.into()));
            }
        }
        Ok(())
    }
}

fn nonzero(v: Rational, name: &str) -> Result<Rational> {
    if v.is_zero() {
        Err(Error::DegenerateDenominator(name.into()))
    } else {
        Ok(v)
    }
}

/// Lax weights `(ā, b̄, 1)` at the spectral point.
pub fn lax_weights_mu(s: &SpectralTriple) -> Result<Weights> {
    let den = nonzero(s.lax_denominator(), "mu1 - mu3 - mu1*mu2 + mu1*mu3")?;
    let (m1, m2, m3) = (&s.mu1, &s.mu2, &s.mu3);
    let a = (m2 - m1 - m3 + m1 * m3) / &den;
    let b = m2 * (Rational::one() - m1) / &den;
    Ok(Weights::new(a, b, Rational::one()))
}

/// Double-prime weights: the Lax weights at `(mu3, mu2, mu1)`.
pub fn double_prime_weights(s: &SpectralTriple) -> Result<Weights> {
    lax_weights_mu(&s.swapped())
}

/// R-matrix weights `(a_R, b_R, 1)` in closed form.
pub fn r_weights_mu(s: &SpectralTriple) -> Result<RWeights> {
    let d1 = nonzero(s.lax_denominator(), "mu1 - mu3 - mu1*mu2 + mu1*mu3")?;
    let d2 = nonzero(s.r_denominator(), "mu1 - mu3 - mu1*mu3 + mu2*mu3")?;
    let (m1, m2, m3) = (&s.mu1, &s.mu2, &s.mu3);
    let den = d1 * d2;
    let a = (m1 - m3 - m1 * m3) * (m3 - m1 + m1 * m3 - Rational::from_integer(2.into()) * m2 * m3 + m2 * m2)
        / &den;
    let b = m2 * (m3 - m1) * (m1 - m2 + m3 - m1 * m3) / &den;
    Ok(RWeights::new(a, b, Rational::one()))
}

/// Residual of `R12(s) L13(s) L23(s') = L23(s') L13(s) R12(s)` with
/// `s'` the swapped triple. Zero for every admissible `s`.
pub fn verify_ybe_mu(s: &SpectralTriple) -> Result<Matrix> {
    let r = r_weights_mu(s)?;
    let w1 = lax_weights_mu(s)?;
    let w2 = double_prime_weights(s)?;
    Ok(ybe_residual_r(&r, &w1, &w2))
}

/// Spectral point of the divisor `Y` for parameters `(t1, t2, q)`.
pub fn divisor_mu(p: &DivisorParams) -> Result<SpectralTriple> {
    p.validate()?;
    let one = Rational::one();
    let (t1, t2, q) = (&p.t1, &p.t2, &p.q);
    let sum = t1 + t2;
    let mu1 = (q - &one) * &sum / ((t1 + q) * (t2 - &one));
    let mu2 = Rational::from_integer(2.into()) * q * &sum / ((t1 + q) * (t2 + q));
    let mu3 = (q - &one) * &sum / ((t1 - &one) * (t2 + q));
    Ok(SpectralTriple::new(mu1, mu2, mu3))
}

/// Standard Lax weights `((q² - t²)/(t(q² - 1)), q(1 - t²)/(t(q² - 1)), 1)`.
pub fn additive_lax(t: &Rational, q: &Rational) -> Result<Weights> {
    let one = Rational::one();
    let t = nonzero(t.clone(), "t")?;
    let den = nonzero(&t * (q * q - &one), "t*(q^2 - 1)")?;
    let a = (q * q - &t * &t) / &den;
    let b = q * (&one - &t * &t) / &den;
    Ok(Weights::new(a, b, one))
}

/// `Δ = q + 1/q`.
pub fn delta_from_q(q: &Rational) -> Result<Delta> {
    let q = nonzero(q.clone(), "q")?;
    Ok(Delta(&q + q.recip()))
}

/// Residual of `L12(t1/t2) L13(t1) L23(t2) = L23(t2) L13(t1) L12(t1/t2)`.
pub fn verify_additive_ybe(t1: &Rational, t2: &Rational, q: &Rational) -> Result<Matrix> {
    let t2 = nonzero(t2.clone(), "t2")?;
    let lift = |w: &Weights, slot| embed_three(&lax_matrix(w), slot).expect("4x4 operator");
    let l12 = lift(&additive_lax(&(t1 / &t2), q)?, Slot::S12);
    let l13 = lift(&additive_lax(t1, q)?, Slot::S13);
    let l23 = lift(&additive_lax(&t2, q)?, Slot::S23);
    Ok(&(&(&l12 * &l13) * &l23) - &(&(&l23 * &l13) * &l12))
}

/// Composition on the quadric `D(·, Δ)`: the R-weights solving the
/// Yang-Baxter relations for two `c = 1` points of the quadric. The result
/// lies on the same quadric.
pub fn group_law_compose(w1: &Weights, w2: &Weights, delta: &Delta) -> Result<RWeights> {
    if !quadric_d(w1, delta).is_zero() || !quadric_d(w2, delta).is_zero() {
        return Err(Error::NotOnQuadric);
    }
    let r = solve_r_ratios(&w1.normalized()?, &w2.normalized()?)?;
    debug_assert!(quadric_d(&r.clone().into(), delta).is_zero());
    Ok(r)
}
