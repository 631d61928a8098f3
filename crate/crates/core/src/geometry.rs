//! The threefold X inside `CP^8` via the Segre embedding, its chart model
//! `T̄ ⊂ CP^4`, the Segre cubic `S`, the birational maps between `S` and X,
//! and the rational parameterization of `T̄` by `CP^3`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, P3Point, P4Point, P8Point, Rational};
use crate::spectral::SpectralTriple;
use crate::vertex::Weights;

/// Segre embedding `z_ij = w1[i] * w2[j]` with `a -> 0, b -> 1, c -> 2`.
pub fn segre_embed(w1: &Weights, w2: &Weights) -> Result<P8Point> {
    let (u, v) = (w1.as_array(), w2.as_array());
    let z: Vec<Rational> = u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect();
    P8Point::from_slice(&z)
}

fn z(p: &P8Point, i: usize, j: usize) -> &Rational {
    p.get(3 * i + j)
}

/// The nine 2×2 minors `z_ij z_kl - z_il z_kj` for `i < k`, `j < l`,
/// ordered lexicographically in `(i, k, j, l)`.
pub fn segre_quadrics(p: &P8Point) -> [Rational; 9] {
    let mut out: Vec<Rational> = Vec::with_capacity(9);
    for i in 0..3 {
        for k in i + 1..3 {
            for j in 0..3 {
                for l in j + 1..3 {
                    out.push(z(p, i, j) * z(p, k, l) - z(p, i, l) * z(p, k, j));
                }
            }
        }
    }
    out.try_into().expect("nine minors")
}

/// The quadric cutting X out of the Segre variety,
/// `z00 z01 + z10 z11 - z20 z21 - z00 z10 - z01 z11 + z02 z12`.
///
/// The sign is fixed so that `fz_poly(segre_embed(w1, w2)) = baxter_f(w1, w2)`.
pub fn fz_poly(p: &P8Point) -> Rational {
    z(p, 0, 0) * z(p, 0, 1) + z(p, 1, 0) * z(p, 1, 1) - z(p, 2, 0) * z(p, 2, 1)
        - z(p, 0, 0) * z(p, 1, 0)
        - z(p, 0, 1) * z(p, 1, 1)
        + z(p, 0, 2) * z(p, 1, 2)
}

pub fn on_segre_variety(p: &P8Point) -> bool {
    segre_quadrics(p).iter().all(Zero::is_zero)
}

pub fn on_x(p: &P8Point) -> bool {
    on_segre_variety(p) && fz_poly(p).is_zero()
}

/// Keeps `(z00 : z01 : z02 : z10 : z20)` on the chart `z00 != 0`.
pub fn chart_project(p: &P8Point) -> Result<P4Point> {
    if z(p, 0, 0).is_zero() {
        return Err(Error::OutsideChart("z00"));
    }
    P4Point::new([
        z(p, 0, 0).clone(),
        z(p, 0, 1).clone(),
        z(p, 0, 2).clone(),
        z(p, 1, 0).clone(),
        z(p, 2, 0).clone(),
    ])
}

/// Rebuilds the eliminated coordinates `z11, z12, z21, z22` from the minors.
pub fn chart_lift(p: &P4Point) -> Result<P8Point> {
    let [z00, z01, z02, z10, z20] = p.coords();
    if z00.is_zero() {
        return Err(Error::OutsideChart("z00"));
    }
    P8Point::new([
        z00.clone(),
        z01.clone(),
        z02.clone(),
        z10.clone(),
        z01 * z10 / z00,
        z02 * z10 / z00,
        z20.clone(),
        z01 * z20 / z00,
        z02 * z20 / z00,
    ])
}

/// Cubic of `T̄`: `z01 (z00² + z10² - z20²) - z10 (z00² + z01² - z02²)`,
/// coordinates ordered `(z00, z01, z02, z10, z20)`.
pub fn tbar_cubic(p: &P4Point) -> Rational {
    let [z00, z01, z02, z10, z20] = p.coords();
    let sq0 = z00 * z00;
    z01 * (&sq0 + z10 * z10 - z20 * z20) - z10 * (&sq0 + z01 * z01 - z02 * z02)
}

/// `Σ x_i³ - (Σ x_i)³`.
pub fn segre_cubic(x: &P4Point) -> Rational {
    let sigma: Rational = x.coords().iter().sum();
    let cubes: Rational = x.coords().iter().map(|v| v * v * v).sum();
    cubes - &sigma * &sigma * &sigma
}

/// Linear change of coordinates taking `T̄` onto `S`, acting on
/// `(z00, z01, z02, z10, z20)`.
pub fn tbar_to_segre_matrix() -> Matrix {
    Matrix::from_i64(&[
        &[1, 1, 0, -1, 0],
        &[0, -1, 0, 0, 1],
        &[0, -1, 0, 0, -1],
        &[0, 0, -1, 1, 0],
        &[0, 0, 1, 1, 0],
    ])
}

pub fn proj_to_segre(p: &P4Point) -> Result<P4Point> {
    let x = tbar_to_segre_matrix().apply(p.coords())?;
    P4Point::from_slice(&x)
}

/// Inverse of [`proj_to_segre`], taking `S` back to `T̄`.
pub fn segre_to_tbar(x: &P4Point) -> Result<P4Point> {
    let inv = tbar_to_segre_matrix().inverse().expect("invertible");
    P4Point::from_slice(&inv.apply(x.coords())?)
}

/// Rational map `S --> X`.
///
/// The coordinates `(φ0 : φ1 : φ2 : φ3 : φ4/φ0 : φ5/φ0 : φ6 : φ7/φ0 : φ8/φ0)`
/// are cleared to `(φ0², φ1φ0, φ2φ0, φ3φ0, φ4, φ5, φ6φ0, φ7, φ8)`.
pub fn phi_map(x: &P4Point) -> Result<P8Point> {
    let [x0, x1, x2, x3, x4] = x.coords();
    let two = Rational::from_integer(2.into());
    let phi0 = &two * x0 + x1 + x2 + x3 + x4;
    if phi0.is_zero() {
        return Err(Error::BaseLocus("phi"));
    }
    let s12 = x1 + x2;
    let d12 = x1 - x2;
    let s34 = x3 + x4;
    let d34 = x3 - x4;
    let phi1 = -&s12;
    let phi2 = x4 - x3;
    let phi3 = s34.clone();
    let phi4 = -(&s12 * &s34);
    let phi5 = -(&d34 * &s34);
    let phi6 = d12.clone();
    let phi7 = -(&d12 * &s12);
    let phi8 = -(&d12 * &d34);
    P8Point::new([
        &phi0 * &phi0,
        &phi1 * &phi0,
        &phi2 * &phi0,
        &phi3 * &phi0,
        phi4,
        phi5,
        &phi6 * &phi0,
        phi7,
        phi8,
    ])
    .map_err(|_| Error::BaseLocus("phi"))
}

/// Inverse map `X --> S`:
/// `(z00 + z01 - z10 : z20 - z01 : -z01 - z20 : z10 - z02 : z10 + z02)`.
pub fn phi_inverse(p: &P8Point) -> Result<P4Point> {
    let (z00, z01, z02, z10, z20) = (z(p, 0, 0), z(p, 0, 1), z(p, 0, 2), z(p, 1, 0), z(p, 2, 0));
    P4Point::new([
        z00 + z01 - z10,
        z20 - z01,
        -z01 - z20,
        z10 - z02,
        z10 + z02,
    ])
    .map_err(|_| Error::BaseLocus("phi inverse"))
}

/// The five quadrics parameterizing `T̄` from `CP^3`.
fn varphi_polys(l: &P3Point) -> [Rational; 5] {
    let [l0, l1, l2, l3] = l.coords();
    [
        -(l0 * l2) + l3 * (l0 - l1 + l2),
        l1 * (l2 - l3),
        l2 * (l1 - l3) + l0 * (l3 - l2),
        l1 * (l0 - l3),
        -(l2 * l3) + l0 * (l2 + l3 - l1),
    ]
}

/// Rational map `CP^3 --> T̄`.
pub fn varphi_map(l: &P3Point) -> Result<P4Point> {
    P4Point::new(varphi_polys(l)).map_err(|_| Error::BaseLocus("varphi"))
}

/// Single- and double-prime weight triples at `λ`, the second obtained from
/// the first by `λ0 <-> λ2`. Each is returned with `c = 1`.
pub fn weight_ratios_lambda(l: &P3Point) -> Result<(Weights, Weights)> {
    let [l0, l1, l2, l3] = l.coords();
    let triple = |l0: &Rational, l2: &Rational| -> Result<Weights> {
        let den = l0 * (l2 - l1 + l3) - l2 * l3;
        if den.is_zero() {
            return Err(Error::DegenerateDenominator(
                "lambda0*(lambda2 - lambda1 + lambda3) - lambda2*lambda3".into(),
            ));
        }
        let a = l3 * (l0 - l1 + l2) - l0 * l2;
        let b = l1 * (l0 - l3);
        Ok(Weights::new(a / &den, b / &den, Rational::one()))
    };
    Ok((triple(l0, l2)?, triple(l2, l0)?))
}

/// `μ_i = λ_{i-1} / λ3`.
pub fn affine_mu_from_lambda(l: &P3Point) -> Result<SpectralTriple> {
    let [l0, l1, l2, l3] = l.coords();
    if l3.is_zero() {
        return Err(Error::OutsideChart("lambda3"));
    }
    Ok(SpectralTriple::new(l0 / l3, l1 / l3, l2 / l3))
}

/// Gradient of the Segre cubic, `3 x_i² - 3 σ²` with `σ = Σ x_i`, evaluated
/// on the canonical representative.
pub fn segre_gradient(x: &P4Point) -> [Rational; 5] {
    let three = Rational::from_integer(3.into());
    let sigma: Rational = x.coords().iter().sum();
    let s2 = &sigma * &sigma;
    x.coords().clone().map(|v| &three * (&v * &v - &s2))
}

/// Singular point of `S`: the cubic and all its partials vanish.
pub fn is_node(x: &P4Point) -> bool {
    segre_cubic(x).is_zero() && segre_gradient(x).iter().all(Zero::is_zero)
}

/// The ten nodes of `S`, from the symmetric presentation: first five entries
/// of each arrangement of `(1, 1, 1, -1, -1, -1)`, identified up to sign.
/// Sorted by canonical coordinates.
pub fn list_nodes() -> Vec<P4Point> {
    let mut nodes: Vec<P4Point> = Vec::new();
    for mask in 0u32..64 {
        if mask.count_ones() != 3 {
            continue;
        }
        let six: Vec<i64> = (0..6).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
        debug_assert_eq!(six[5], -six[..5].iter().sum::<i64>());
        let p = P4Point::from_i64([six[0], six[1], six[2], six[3], six[4]]).expect("nonzero");
        if !nodes.contains(&p) {
            nodes.push(p);
        }
    }
    nodes.sort_by_key(|p| p.coords().clone());
    nodes
}
