//! The symmetric six-vertex Lax operator and R-matrix, the three scalar
//! Yang-Baxter relations, and the integrability polynomial `F`.
//!
//! Both 4×4 operators share the layout
//!
//! ```text
//! [ a 0 0 0 ]
//! [ 0 b c 0 ]
//! [ 0 c b 0 ]
//! [ 0 0 0 a ]
//! ```
//!
//! in the basis `|00>, |01>, |10>, |11>`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{embed_three, Matrix, P2Point, Rational, Slot};

/// Vertex weights `(a, b, c)` of a Lax operator.
///
/// The triple is kept as given rather than canonicalized: matrices and
/// partition functions depend on the representative, membership in the
/// threefold X does not. Use [`Weights::proj_eq`] for projective comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weights {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// Entries `(a, b, c)` of an R-matrix, same layout as [`Weights`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RWeights {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// Anisotropy parameter of the quadric `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Delta(pub Rational);

macro_rules! triple_impl {
    ($t:ident) => {
        impl $t {
            pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
                Self { a, b, c }
            }

            pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
                use crate::exactalg::int;
                Self::new(int(a), int(b), int(c))
            }

            pub fn as_array(&self) -> [Rational; 3] {
                [self.a.clone(), self.b.clone(), self.c.clone()]
            }

            pub fn to_proj(&self) -> Result<P2Point> {
                P2Point::new(self.as_array())
            }

            /// Projective equality; `false` if either triple is zero.
            pub fn proj_eq(&self, other: &Self) -> bool {
                crate::exactalg::proj_equal(&self.as_array(), &other.as_array()).unwrap_or(false)
            }

            pub fn scaled(&self, s: &Rational) -> Self {
                Self::new(&self.a * s, &self.b * s, &self.c * s)
            }

            /// Representative with `c = 1`.
            pub fn normalized(&self) -> Result<Self> {
                if self.c.is_zero() {
                    return Err(Error::DegenerateDenominator("c".into()));
                }
                Ok(Self::new(&self.a / &self.c, &self.b / &self.c, Rational::one()))
            }
        }
    };
}

triple_impl!(Weights);
triple_impl!(RWeights);

impl Weights {
    /// The sign change `(a, b, c) -> (-a, -b, c)`. It preserves `F` in each
    /// argument separately and conjugates the Lax operator by `diag(1,-1,-1,1)`
    /// up to an overall sign.
    pub fn gauge_flip(&self) -> Self {
        Self::new(-&self.a, -&self.b, self.c.clone())
    }
}

impl From<RWeights> for Weights {
    fn from(r: RWeights) -> Self {
        Weights::new(r.a, r.b, r.c)
    }
}

impl From<Weights> for RWeights {
    fn from(w: Weights) -> Self {
        RWeights::new(w.a, w.b, w.c)
    }
}

fn six_vertex_matrix(a: &Rational, b: &Rational, c: &Rational) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    m[(0, 0)] = a.clone();
    m[(3, 3)] = a.clone();
    m[(1, 1)] = b.clone();
    m[(2, 2)] = b.clone();
    m[(1, 2)] = c.clone();
    m[(2, 1)] = c.clone();
    m
}

pub fn lax_matrix(w: &Weights) -> Matrix {
    six_vertex_matrix(&w.a, &w.b, &w.c)
}

pub fn r_matrix(rw: &RWeights) -> Matrix {
    six_vertex_matrix(&rw.a, &rw.b, &rw.c)
}

/// The transposition `P` on `C^2 ⊗ C^2`.
pub fn permutation() -> Matrix {
    Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
}

/// `F(w1; w2) = (a1² + b1² - c1²) a2 b2 - (a2² + b2² - c2²) a1 b1`.
pub fn baxter_f(w1: &Weights, w2: &Weights) -> Rational {
    let q1 = &w1.a * &w1.a + &w1.b * &w1.b - &w1.c * &w1.c;
    let q2 = &w2.a * &w2.a + &w2.b * &w2.b - &w2.c * &w2.c;
    q1 * &w2.a * &w2.b - q2 * &w1.a * &w1.b
}

/// `D(a, b, c) = a² + b² - c² - Δ a b`.
pub fn quadric_d(w: &Weights, delta: &Delta) -> Rational {
    &w.a * &w.a + &w.b * &w.b - &w.c * &w.c - &delta.0 * &w.a * &w.b
}

/// The three independent scalar relations the Yang-Baxter equation reduces
/// to for this layout, as left-hand sides.
pub fn ybe_relations(rw: &RWeights, w1: &Weights, w2: &Weights) -> [Rational; 3] {
    let (ra, rb, rc) = (&rw.a, &rw.b, &rw.c);
    let (a1, b1, c1) = (&w1.a, &w1.b, &w1.c);
    let (a2, b2, c2) = (&w2.a, &w2.b, &w2.c);
    [
        ra * c1 * a2 - rb * c1 * b2 - rc * a1 * c2,
        rc * b1 * a2 - rc * a1 * b2 - rb * c1 * c2,
        rc * c1 * b2 + rb * a1 * c2 - ra * b1 * c2,
    ]
}

/// Coefficient matrix of the linear system in the unknowns `(a_R, b_R, c_R)`
/// formed by the relations, rows ordered as first, second, third relation.
pub fn coeff_matrix(w1: &Weights, w2: &Weights) -> Matrix {
    let (a1, b1, c1) = (&w1.a, &w1.b, &w1.c);
    let (a2, b2, c2) = (&w2.a, &w2.b, &w2.c);
    Matrix::from_rows(vec![
        vec![c1 * a2, -(c1 * b2), -(a1 * c2)],
        vec![Rational::zero(), -(c1 * c2), b1 * a2 - a1 * b2],
        vec![-(b1 * c2), a1 * c2, c1 * b2],
    ])
    .expect("3x3 literal")
}

/// Determinant of [`coeff_matrix`]; equals `c1 c2 F(w1; w2)`.
pub fn coeff_det(w1: &Weights, w2: &Weights) -> Rational {
    crate::exactalg::det(&coeff_matrix(w1, w2)).expect("square")
}

/// Solves the first two relations for the R-matrix ratios, normalized to
/// `c_R = 1`. Requires `c1, c2, a2` nonzero.
pub fn solve_r_ratios(w1: &Weights, w2: &Weights) -> Result<RWeights> {
    for (name, v) in [("c'", &w1.c), ("c''", &w2.c), ("a''", &w2.a)] {
        if v.is_zero() {
            return Err(Error::DegenerateDenominator(name.into()));
        }
    }
    let (a1, b1, c1) = (&w1.a, &w1.b, &w1.c);
    let (a2, b2, c2) = (&w2.a, &w2.b, &w2.c);
    let cross = b1 * a2 - a1 * b2;
    let ra = &cross * b2 / (c1 * a2 * c2) + a1 * c2 / (c1 * a2);
    let rb = cross / (c1 * c2);
    Ok(RWeights::new(ra, rb, Rational::one()))
}

/// `R12 L13(w1) L23(w2) - L23(w2) L13(w1) R12` on `C^2 ⊗ C^2 ⊗ C^2`.
pub fn ybe_residual_r(rw: &RWeights, w1: &Weights, w2: &Weights) -> Matrix {
    let r12 = lift(&r_matrix(rw), Slot::S12);
    let l13 = lift(&lax_matrix(w1), Slot::S13);
    let l23 = lift(&lax_matrix(w2), Slot::S23);
    &(&(&r12 * &l13) * &l23) - &(&(&l23 * &l13) * &r12)
}

/// Residual of the braid form `Ř (L(w1) ⊗ L(w2)) - (L(w2) ⊗ L(w1)) Ř` with
/// `Ř = P R`, realized as
/// `Ř12 L13(w1) L23(w2) - L13(w2) L23(w1) Ř12`.
///
/// Equals `P12 * ybe_residual_r(rw, w1, w2)` identically.
pub fn ybe_residual_check(rw: &RWeights, w1: &Weights, w2: &Weights) -> Matrix {
    let check = lift(&(&permutation() * &r_matrix(rw)), Slot::S12);
    let lhs = &(&check * &lift(&lax_matrix(w1), Slot::S13)) * &lift(&lax_matrix(w2), Slot::S23);
    let rhs = &(&lift(&lax_matrix(w2), Slot::S13) * &lift(&lax_matrix(w1), Slot::S23)) * &check;
    &lhs - &rhs
}

fn lift(op: &Matrix, slot: Slot) -> Matrix {
    embed_three(op, slot).expect("4x4 operator")
}
