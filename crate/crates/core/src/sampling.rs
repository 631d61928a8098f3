//! Seeded random sampling of rational inputs for the randomized checks.
//!
//! Rationals have numerator and denominator drawn uniformly from
//! `[-20, 20]` (denominator nonzero). Samplers for constrained objects reject
//! and redraw until the constraint holds.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{P3Point, P4Point, P8Point, Rational};
use crate::geometry::{proj_to_segre, segre_embed, varphi_map};
use crate::spectral::{divisor_mu, DivisorParams, SpectralTriple};
use crate::spectral::{double_prime_weights, lax_weights_mu};
use crate::vertex::Weights;

pub const COEFF_BOUND: i64 = 20;

const MAX_ATTEMPTS: usize = 100_000;

/// Deterministic sampler; equal seeds give equal sample streams.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn retry<T>(&mut self, mut draw: impl FnMut(&mut Self) -> Option<T>) -> T {
        for _ in 0..MAX_ATTEMPTS {
            if let Some(v) = draw(self) {
                return v;
            }
        }
        panic!("sampler rejected {MAX_ATTEMPTS} consecutive draws");
    }

    pub fn integer(&mut self) -> i64 {
        self.rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.integer();
        let den = self.retry(|s| Some(s.integer()).filter(|&d| d != 0));
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        self.retry(|s| Some(s.rational()).filter(|r| !r.is_zero()))
    }

    /// Any triple that is not identically zero.
    pub fn weights(&mut self) -> Weights {
        self.retry(|s| {
            let w = Weights::new(s.rational(), s.rational(), s.rational());
            (!(w.a.is_zero() && w.b.is_zero() && w.c.is_zero())).then_some(w)
        })
    }

    /// Triple with every weight nonzero.
    pub fn generic_weights(&mut self) -> Weights {
        Weights::new(self.nonzero_rational(), self.nonzero_rational(), self.nonzero_rational())
    }

    /// Admissible spectral point whose double-prime `a` weight is nonzero, so
    /// both the closed-form and the ratio-solved R-matrix exist.
    pub fn spectral_triple(&mut self) -> SpectralTriple {
        self.retry(|s| {
            let t = SpectralTriple::new(s.rational(), s.rational(), s.rational());
            if !t.is_admissible() {
                return None;
            }
            let dp = double_prime_weights(&t).ok()?;
            (!dp.a.is_zero()).then_some(t)
        })
    }

    /// Divisor parameters with an admissible spectral image and `t1, t2 != 0`.
    pub fn divisor_params(&mut self) -> DivisorParams {
        self.retry(|s| {
            let p = DivisorParams::new(s.nonzero_rational(), s.nonzero_rational(), s.rational());
            let mu = divisor_mu(&p).ok()?;
            mu.is_admissible().then_some(p)
        })
    }

    pub fn lambda(&mut self) -> P3Point {
        self.retry(|s| P3Point::new([s.rational(), s.rational(), s.rational(), s.rational()]).ok())
    }

    pub fn p4(&mut self) -> P4Point {
        self.retry(|s| {
            P4Point::new([s.rational(), s.rational(), s.rational(), s.rational(), s.rational()]).ok()
        })
    }

    /// Point of `T̄`: a random `λ` pushed through the parameterization.
    pub fn point_on_tbar(&mut self) -> P4Point {
        self.retry(|s| varphi_map(&s.lambda()).ok())
    }

    /// Point of the Segre cubic, image of [`Sampler::point_on_tbar`].
    pub fn point_on_segre_cubic(&mut self) -> P4Point {
        let y = self.point_on_tbar();
        proj_to_segre(&y).expect("invertible linear map")
    }

    /// Point of X: Segre image of the weight pair at a random spectral point.
    pub fn point_on_x(&mut self) -> P8Point {
        let s = self.spectral_triple();
        let w1 = lax_weights_mu(&s).expect("admissible");
        let w2 = double_prime_weights(&s).expect("admissible");
        segre_embed(&w1, &w2).expect("c = 1 entries are nonzero")
    }
}
