//! Test-only substitution oracle: plain i128 fractions and direct evaluation
//! of the closed-form weight formulas, independent of the library code paths.
#![allow(dead_code)]

use std::ops::{Add, Div, Mul, Neg, Sub};

use sixvertex_core::exactalg::{ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac(pub i128, pub i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    pub fn new(n: i128, d: i128) -> Self {
        assert!(d != 0, "zero denominator in oracle");
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }

    pub fn int(n: i128) -> Self {
        Frac(n, 1)
    }

    pub fn to_rational(self) -> Rational {
        ratio(self.0 as i64, self.1 as i64)
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 - o.0 * self.1, self.1 * o.1)
    }
}

impl Mul for Frac {
    type Output = Frac;
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
}

impl Div for Frac {
    type Output = Frac;
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1, self.1 * o.0)
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-self.0, self.1)
    }
}

/// Lax weights `(a, b)` at `(m1, m2, m3)`, with `c = 1`.
pub fn lax_ab(m1: Frac, m2: Frac, m3: Frac) -> (Frac, Frac) {
    let one = Frac::int(1);
    let den = m1 - m3 - m1 * m2 + m1 * m3;
    ((m2 - m1 - m3 + m1 * m3) / den, m2 * (one - m1) / den)
}

/// Closed-form R-weights `(a, b)` at `(m1, m2, m3)`, with `c = 1`.
pub fn r_ab(m1: Frac, m2: Frac, m3: Frac) -> (Frac, Frac) {
    let two = Frac::int(2);
    let d = (m1 - m3 - m1 * m2 + m1 * m3) * (m1 - m3 - m1 * m3 + m2 * m3);
    let a = (m1 - m3 - m1 * m3) * (m3 - m1 + m1 * m3 - two * m2 * m3 + m2 * m2) / d;
    let b = m2 * (m3 - m1) * (m1 - m2 + m3 - m1 * m3) / d;
    (a, b)
}

/// Divisor specialization `(t1, t2, q) -> (mu1, mu2, mu3)`.
pub fn divisor(t1: Frac, t2: Frac, q: Frac) -> (Frac, Frac, Frac) {
    let one = Frac::int(1);
    let two = Frac::int(2);
    let s = t1 + t2;
    (
        (q - one) * s / ((t1 + q) * (t2 - one)),
        two * q * s / ((t1 + q) * (t2 + q)),
        (q - one) * s / ((t1 - one) * (t2 + q)),
    )
}

/// Standard Lax weights `(a, b)` at spectral value `t`, with `c = 1`.
pub fn additive_ab(t: Frac, q: Frac) -> (Frac, Frac) {
    let one = Frac::int(1);
    let den = t * (q * q - one);
    ((q * q - t * t) / den, q * (one - t * t) / den)
}
