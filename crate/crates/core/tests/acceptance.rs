//! Acceptance gate. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any fails. All checks are exact; the only tolerances are
//! the wall-clock limits below.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};

use common::{additive_ab, divisor, lax_ab, r_ab, Frac};
use sixvertex_core::exactalg::{int, ratio, Rational};
use sixvertex_core::geometry::*;
use sixvertex_core::sampling::Sampler;
use sixvertex_core::spectral::*;
use sixvertex_core::transfer::*;
use sixvertex_core::vertex::*;
use sixvertex_core::{DivisorParams, SpectralTriple, Weights};

const YBE_LIMIT: Duration = Duration::from_secs(5);
const COMMUTE_N4_LIMIT: Duration = Duration::from_secs(10);
const ENUMERATE_N3_LIMIT: Duration = Duration::from_secs(60);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn frac(r: &Rational) -> Frac {
    Frac::new(r.numer().to_i128().unwrap(), r.denom().to_i128().unwrap())
}

fn weights_ab(ab: (Frac, Frac)) -> Weights {
    Weights::new(ab.0.to_rational(), ab.1.to_rational(), int(1))
}

fn ybe_exactness() -> Check {
    let start = Instant::now();
    let mut s = Sampler::new(1);
    let mut triples = vec![SpectralTriple::from_i64(2, 3, 5)];
    triples.extend((0..100).map(|_| s.spectral_triple()));
    for t in &triples {
        let (w1, w2) = (lax_weights_mu(t).unwrap(), double_prime_weights(t).unwrap());
        let closed = r_weights_mu(t).unwrap();
        let solved = solve_r_ratios(&w1, &w2).unwrap();
        ensure(verify_ybe_mu(t).unwrap().is_zero(), format!("spectral residual at {t:?}"))?;
        ensure(ybe_residual_r(&solved, &w1, &w2).is_zero(), format!("ratio residual at {t:?}"))?;
        ensure(ybe_residual_check(&closed, &w1, &w2).is_zero(), format!("braid residual at {t:?}"))?;
    }
    let took = start.elapsed();
    ensure(took < YBE_LIMIT, format!("took {took:?}"))?;
    Ok(format!("{} triples x 3 residuals, {took:.2?}", triples.len()))
}

fn concrete_weights() -> Check {
    let (m1, m2, m3) = (Frac::int(2), Frac::int(3), Frac::int(5));
    let oracle_lax = lax_ab(m1, m2, m3);
    let oracle_r = r_ab(m1, m2, m3);
    ensure(oracle_lax == (Frac::int(6), Frac::int(-3)), format!("oracle lax {oracle_lax:?}"))?;
    ensure(oracle_r == (Frac::int(52), Frac::int(-27)), format!("oracle r {oracle_r:?}"))?;
    let t = SpectralTriple::from_i64(2, 3, 5);
    let lax = lax_weights_mu(&t).unwrap();
    let r: Weights = r_weights_mu(&t).unwrap().into();
    ensure(lax == weights_ab(oracle_lax), format!("lax {lax:?}"))?;
    ensure(r == weights_ab(oracle_r), format!("r {r:?}"))?;
    Ok("lax (6,-3,1), r (52,-27,1)".into())
}

fn determinant_identity() -> Check {
    let mut s = Sampler::new(3);
    for _ in 0..100 {
        let (w1, w2) = (s.weights(), s.weights());
        let expected = &w1.c * &w2.c * baxter_f(&w1, &w2);
        ensure(coeff_det(&w1, &w2) == expected, format!("{w1:?} {w2:?}"))?;
    }
    Ok("100 pairs".into())
}

fn check_divisor(p: &DivisorParams) -> Result<(), String> {
    let (t1, t2, q) = (frac(&p.t1), frac(&p.t2), frac(&p.q));
    let (m1, m2, m3) = divisor(t1, t2, q);
    let mu = divisor_mu(p).unwrap();
    let oracle_mu = SpectralTriple::new(m1.to_rational(), m2.to_rational(), m3.to_rational());
    ensure(mu == oracle_mu, format!("mu {mu:?} at {p:?}"))?;
    // oracle consistency: the spectral formulas reproduce the additive ones
    ensure(lax_ab(m1, m2, m3) == additive_ab(t1, q), format!("oracle lax at {p:?}"))?;
    ensure(lax_ab(m3, m2, m1) == additive_ab(t2, q), format!("oracle double prime at {p:?}"))?;
    ensure(r_ab(m1, m2, m3) == additive_ab(t1 / t2, q), format!("oracle r at {p:?}"))?;
    ensure(lax_weights_mu(&mu).unwrap() == weights_ab(additive_ab(t1, q)), format!("lax at {p:?}"))?;
    ensure(
        double_prime_weights(&mu).unwrap() == weights_ab(additive_ab(t2, q)),
        format!("double prime at {p:?}"),
    )?;
    let r: Weights = r_weights_mu(&mu).unwrap().into();
    ensure(r == weights_ab(additive_ab(t1 / t2, q)), format!("r at {p:?}"))?;
    ensure(
        verify_additive_ybe(&p.t1, &p.t2, &p.q).unwrap().is_zero(),
        format!("additive residual at {p:?}"),
    )
}

fn divisor_specialization() -> Check {
    let p = DivisorParams::from_i64(3, 5, 2);
    let mu = divisor_mu(&p).unwrap();
    ensure(
        mu == SpectralTriple::new(ratio(2, 5), ratio(32, 35), ratio(4, 7)),
        format!("mu {mu:?}"),
    )?;
    let q = int(2);
    let fixed = [
        (additive_lax(&int(3), &q).unwrap(), (-5, 9, -16, 9)),
        (additive_lax(&int(5), &q).unwrap(), (-7, 5, -16, 5)),
        (additive_lax(&ratio(3, 5), &q).unwrap(), (91, 45, 32, 45)),
    ];
    for (w, (an, ad, bn, bd)) in fixed {
        ensure(w == Weights::new(ratio(an, ad), ratio(bn, bd), int(1)), format!("{w:?}"))?;
    }
    check_divisor(&p)?;
    let mut s = Sampler::new(4);
    for _ in 0..50 {
        check_divisor(&s.divisor_params())?;
    }
    Ok("(3,5,2) and 50 random parameter triples".into())
}

fn group_law() -> Check {
    let mut s = Sampler::new(5);
    let mut done = 0;
    let mut skipped = 0;
    while done < 50 {
        let p = s.divisor_params();
        let delta = delta_from_q(&p.q).unwrap();
        let (Ok(w1), Ok(w2)) = (additive_lax(&p.t1, &p.q), additive_lax(&p.t2, &p.q)) else {
            skipped += 1;
            continue;
        };
        let Ok(r) = group_law_compose(&w1, &w2, &delta) else {
            skipped += 1;
            continue;
        };
        ensure(quadric_d(&r.into(), &delta).is_zero(), format!("off quadric at {p:?}"))?;
        done += 1;
    }
    Ok(format!("50 pairs ({skipped} degenerate draws skipped)"))
}

fn transfer_commutation() -> Check {
    let mut s = Sampler::new(6);
    let pairs: Vec<_> = (0..30)
        .map(|_| {
            let t = s.spectral_triple();
            (lax_weights_mu(&t).unwrap(), double_prime_weights(&t).unwrap())
        })
        .collect();
    for n in 2..=3 {
        for (w1, w2) in &pairs {
            ensure(transfer_commutator(w1, w2, n).unwrap().is_zero(), format!("n={n} {w1:?} {w2:?}"))?;
        }
    }
    let start = Instant::now();
    for (w1, w2) in &pairs {
        ensure(transfer_commutator(w1, w2, 4).unwrap().is_zero(), format!("n=4 {w1:?} {w2:?}"))?;
    }
    let took = start.elapsed();
    ensure(took < COMMUTE_N4_LIMIT, format!("n=4 took {took:?}"))?;
    Ok(format!("30 points, n=2..4, n=4 batch {took:.2?}"))
}

/// Independent ice-rule count on the n x n torus.
fn ice_states(n: usize) -> usize {
    let edges = 2 * n * n;
    (0u64..1 << edges)
        .filter(|bits| {
            let h = |r: usize, c: usize| bits >> (r * n + c % n) & 1;
            let v = |r: usize, c: usize| bits >> (n * n + (r % n) * n + c) & 1;
            (0..n).all(|r| (0..n).all(|c| h(r, c) + v(r, c) == h(r, c + 1) + v(r + 1, c)))
        })
        .count()
}

fn partition_oracle() -> Check {
    let mut s = Sampler::new(7);
    for _ in 0..20 {
        let w = s.weights();
        let z1 = partition_function(&w, 1).unwrap();
        ensure(z1 == int(2) * (&w.a + &w.b), format!("Z1 at {w:?}"))?;
        for n in 1..=3 {
            let (tm, en) = (partition_function(&w, n).unwrap(), enumerate_partition(&w, n).unwrap());
            ensure(tm == en, format!("n={n} {w:?}: {tm} vs {en}"))?;
        }
    }
    let ones = Weights::from_i64(1, 1, 1);
    ensure(ice_states(2) == 18, format!("ice states {}", ice_states(2)))?;
    ensure(partition_function(&ones, 2).unwrap() == int(18), "Z2(1,1,1) by transfer")?;
    ensure(enumerate_partition(&ones, 2).unwrap() == int(18), "Z2(1,1,1) by enumeration")?;
    let start = Instant::now();
    let hist = enumerate_vertex_counts(3).unwrap();
    let took = start.elapsed();
    ensure(took < ENUMERATE_N3_LIMIT, format!("n=3 enumeration took {took:?}"))?;
    let states: u64 = hist.values().sum();
    ensure(states as usize == ice_states(3), format!("n=3 state count {states}"))?;
    Ok(format!("20 triples, n=1..3, Z2(1,1,1)=18, n=3 enumeration {took:.2?}"))
}

fn geometry_suite() -> Check {
    let mut s = Sampler::new(8);
    for _ in 0..100 {
        let (w1, w2) = (s.generic_weights(), s.generic_weights());
        let embedded = segre_embed(&w1, &w2).unwrap();
        let f = baxter_f(&w1, &w2);
        // with c' = c'' = 1 the last coordinate is the scale of the canonical form
        let (n1, n2) = (w1.normalized().unwrap(), w2.normalized().unwrap());
        let canonical = segre_embed(&n1, &n2).unwrap();
        let scale = canonical.get(8).clone();
        ensure(
            fz_poly(&canonical) == &scale * &scale * baxter_f(&n1, &n2),
            format!("embedding identity at {w1:?} {w2:?}"),
        )?;
        ensure(fz_poly(&embedded).is_zero() == f.is_zero(), "embedding zero set")?;
        ensure(on_segre_variety(&embedded), "embedding off Segre variety")?;
        let y = chart_project(&embedded).unwrap();
        ensure(chart_lift(&y).unwrap() == embedded, format!("chart roundtrip at {w1:?} {w2:?}"))?;
    }
    let mut done = 0;
    while done < 50 {
        let x = s.point_on_segre_cubic();
        let Ok(p) = phi_map(&x) else { continue };
        ensure(on_x(&p), format!("phi image off X at {x}"))?;
        ensure(phi_inverse(&p).unwrap() == x, format!("phi roundtrip on S at {x}"))?;
        done += 1;
    }
    let mut done = 0;
    while done < 50 {
        let p = s.point_on_x();
        let Ok(x) = phi_inverse(&p) else { continue };
        let Ok(back) = phi_map(&x) else { continue };
        ensure(back == p, format!("phi roundtrip on X at {p}"))?;
        done += 1;
    }
    for _ in 0..50 {
        let l = s.lambda();
        if let Ok(y) = varphi_map(&l) {
            ensure(tbar_cubic(&y).is_zero(), format!("varphi image off cubic at {l}"))?;
        }
    }
    for i in 0..100 {
        let y = if i % 2 == 0 { s.point_on_tbar() } else { s.p4() };
        let x = proj_to_segre(&y).unwrap();
        ensure(
            tbar_cubic(&y).is_zero() == segre_cubic(&x).is_zero(),
            format!("linear equivalence at {y}"),
        )?;
        ensure(segre_to_tbar(&x).unwrap() == y, format!("linear roundtrip at {y}"))?;
    }
    Ok("embedding 100, phi 50+50, varphi 50, linear map 100".into())
}

fn node_census() -> Check {
    let nodes = list_nodes();
    ensure(nodes.len() == 10, format!("{} nodes", nodes.len()))?;
    for (i, x) in nodes.iter().enumerate() {
        ensure(segre_cubic(x).is_zero() && is_node(x), format!("{x} not a node"))?;
        ensure(!nodes[..i].contains(x), format!("{x} repeated"))?;
    }
    let mut s = Sampler::new(9);
    let mut done = 0;
    while done < 100 {
        let x = s.point_on_segre_cubic();
        if nodes.contains(&x) {
            continue;
        }
        ensure(segre_gradient(&x).iter().any(|g| !g.is_zero()), format!("singular at {x}"))?;
        done += 1;
    }
    Ok("10 distinct nodes, 100 smooth samples".into())
}

fn lambda_coherence() -> Check {
    let mut s = Sampler::new(10);
    let mut done = 0;
    while done < 50 {
        let l = s.lambda();
        let (Ok((w1, w2)), Ok(mu)) = (weight_ratios_lambda(&l), affine_mu_from_lambda(&l)) else {
            continue;
        };
        let (Ok(lax), Ok(dp)) = (lax_weights_mu(&mu), double_prime_weights(&mu)) else {
            continue;
        };
        ensure(baxter_f(&w1, &w2).is_zero(), format!("F != 0 at {l}"))?;
        ensure(w1.proj_eq(&lax.gauge_flip()), format!("w' mismatch at {l}"))?;
        ensure(w2.proj_eq(&dp.gauge_flip()), format!("w'' mismatch at {l}"))?;
        done += 1;
    }
    Ok("50 points, equal up to (-1,-1,+1)".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("ybe exactness", ybe_exactness),
        ("concrete weight values", concrete_weights),
        ("determinant identity", determinant_identity),
        ("divisor specialization", divisor_specialization),
        ("group law", group_law),
        ("transfer commutation", transfer_commutation),
        ("partition oracle", partition_oracle),
        ("geometry suite", geometry_suite),
        ("node census", node_census),
        ("lambda coherence", lambda_coherence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
