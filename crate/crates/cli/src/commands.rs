use serde_json::{json, Value};
use num_traits::Zero;
use sixvertex_core::exactalg::{format_rational, parse_rational_list};
use sixvertex_core::geometry::*;
use sixvertex_core::sampling::Sampler;
use sixvertex_core::spectral::*;
use sixvertex_core::transfer::*;
use sixvertex_core::vertex::*;
use sixvertex_core::{Error, SpectralTriple, Weights};

use crate::report::{list, rat, triple, Report};

pub const MAX_SITES: usize = 8;

/// Invalid or degenerate input; maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Outcome = Result<Report, InputError>;

pub fn parse_mu(s: &str) -> Result<SpectralTriple, InputError> {
    let v = parse_rational_list(s, 3)?;
    let [m1, m2, m3]: [_; 3] = v.try_into().expect("three values");
    Ok(SpectralTriple::new(m1, m2, m3))
}

pub fn parse_weights(s: &str) -> Result<Weights, InputError> {
    let v = parse_rational_list(s, 3)?;
    let [a, b, c]: [_; 3] = v.try_into().expect("three values");
    Ok(Weights::new(a, b, c))
}

fn mu_input(r: &mut Report, mu: &SpectralTriple) {
    r.input("mu", list(&[mu.mu1.clone(), mu.mu2.clone(), mu.mu3.clone()]));
}

pub fn weights(mu: &SpectralTriple) -> Outcome {
    let lax = lax_weights_mu(mu)?;
    let dp = double_prime_weights(mu)?;
    let rw: Weights = r_weights_mu(mu)?.into();
    let f = baxter_f(&lax, &dp);
    let mut r = Report::new("weights");
    mu_input(&mut r, mu);
    r.value("lax", triple(&lax))
        .value("double_prime", triple(&dp))
        .value("r", triple(&rw))
        .value("F", rat(&f));
    r.check("F_vanishes", f.is_zero(), format!("F = {}", format_rational(&f)));
    Ok(r)
}

struct YbeResiduals {
    spectral: usize,
    ratio: usize,
    braid: usize,
}

fn ybe_residuals(mu: &SpectralTriple) -> Result<YbeResiduals, InputError> {
    let w1 = lax_weights_mu(mu)?;
    let w2 = double_prime_weights(mu)?;
    let closed = r_weights_mu(mu)?;
    let solved = solve_r_ratios(&w1, &w2)?;
    Ok(YbeResiduals {
        spectral: verify_ybe_mu(mu)?.nnz(),
        ratio: ybe_residual_r(&solved, &w1, &w2).nnz(),
        braid: ybe_residual_check(&closed, &w1, &w2).nnz(),
    })
}

pub fn ybe_at_point(mu: &SpectralTriple) -> Outcome {
    let res = ybe_residuals(mu)?;
    let mut r = Report::new("verify ybe");
    mu_input(&mut r, mu);
    for (name, nnz) in [
        ("spectral_residual", res.spectral),
        ("ratio_residual", res.ratio),
        ("braid_residual", res.braid),
    ] {
        r.check(name, nnz == 0, format!("{nnz} nonzero entries"));
    }
    Ok(r)
}

pub fn ybe_random(count: usize, seed: u64) -> Outcome {
    let mut s = Sampler::new(seed);
    let mut fails = [0usize; 3];
    for _ in 0..count {
        let res = ybe_residuals(&s.spectral_triple())?;
        for (slot, nnz) in fails.iter_mut().zip([res.spectral, res.ratio, res.braid]) {
            *slot += usize::from(nnz != 0);
        }
    }
    let mut r = Report::new("verify ybe");
    r.input("random", count.to_string());
    r.seed = Some(seed);
    for (name, failed) in ["spectral_residual", "ratio_residual", "braid_residual"].iter().zip(fails) {
        r.check(name, failed == 0, format!("{}/{count} zero", count - failed));
    }
    r.value("samples", count);
    Ok(r)
}

fn check_sites(n: usize) -> Result<(), InputError> {
    if (1..=MAX_SITES).contains(&n) {
        Ok(())
    } else {
        Err(InputError(format!("size must be in 1..={MAX_SITES}, got {n}")))
    }
}

pub fn verify_commute(mu: &SpectralTriple, sites: usize) -> Outcome {
    check_sites(sites)?;
    let w1 = lax_weights_mu(mu)?;
    let w2 = double_prime_weights(mu)?;
    let comm = transfer_commutator(&w1, &w2, sites)?;
    let mut r = Report::new("verify commute");
    mu_input(&mut r, mu);
    r.input("sites", sites.to_string());
    r.value("dimension", comm.rows());
    r.check("commutator_zero", comm.is_zero(), format!("{} nonzero entries", comm.nnz()));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Transfer,
    Enumerate,
    Both,
}

pub fn partition(w: &Weights, size: usize, method: Method) -> Outcome {
    check_sites(size)?;
    if method != Method::Transfer && size > MAX_ENUMERATION_SIZE {
        return Err(InputError(format!(
            "enumeration requires size <= {MAX_ENUMERATION_SIZE}, got {size}"
        )));
    }
    let mut r = Report::new("partition");
    r.input("weights", list(&w.as_array()));
    r.input("size", size.to_string());
    let transfer = (method != Method::Enumerate).then(|| partition_function(w, size)).transpose()?;
    let enumerate = (method != Method::Transfer).then(|| enumerate_partition(w, size)).transpose()?;
    if let Some(z) = &transfer {
        r.value("transfer", rat(z));
    }
    if let Some(z) = &enumerate {
        r.value("enumerate", rat(z));
    }
    if let (Some(t), Some(e)) = (&transfer, &enumerate) {
        r.value("equal", t == e);
        r.check("oracle_agreement", t == e, format!("{} vs {}", format_rational(t), format_rational(e)));
    }
    Ok(r)
}

fn node_entries() -> (Vec<Value>, usize) {
    let nodes = list_nodes();
    let mut verified = 0;
    let entries = nodes
        .iter()
        .map(|x| {
            let ok = segre_cubic(x).is_zero() && is_node(x);
            verified += usize::from(ok);
            json!({ "point": x.to_colon_string(), "verified": ok })
        })
        .collect();
    (entries, verified)
}

pub fn nodes() -> Report {
    let (entries, verified) = node_entries();
    let count = entries.len();
    let mut r = Report::new("nodes");
    r.value("count", count).value("nodes", entries);
    r.check("node_count", count == 10, format!("{count} nodes"));
    r.check("gradients_vanish", verified == count, format!("{verified}/{count} verified"));
    r
}

/// Tally for one randomized geometry check. Draws that land on a base locus
/// or outside a chart are skipped and counted separately.
#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    fn done(&self, target: usize) -> bool {
        self.passed + self.failed >= target || self.skipped > 100 * target.max(1)
    }

    fn report(&self, r: &mut Report, name: &str, target: usize) {
        let ran = self.passed + self.failed;
        r.check(
            name,
            self.failed == 0 && ran == target,
            format!("{}/{target} passed, {} degenerate draws skipped", self.passed, self.skipped),
        );
    }
}

pub fn verify_geometry(samples: usize, seed: u64) -> Report {
    let mut s = Sampler::new(seed);
    let mut r = Report::new("verify geometry");
    r.input("samples", samples.to_string());
    r.seed = Some(seed);

    let mut embed = Tally::default();
    let mut chart = Tally::default();
    for _ in 0..samples {
        let (w1, w2) = (s.generic_weights(), s.generic_weights());
        let (n1, n2) = (w1.normalized().expect("c != 0"), w2.normalized().expect("c != 0"));
        let p = segre_embed(&n1, &n2).expect("nonzero product");
        // c' = c'' = 1, so z22 is the scale of the canonical representative
        let k = p.get(8).clone();
        embed.record(on_segre_variety(&p) && fz_poly(&p) == &k * &k * baxter_f(&n1, &n2));
        let y = chart_project(&p).expect("z00 != 0");
        chart.record(chart_lift(&y).map(|q| q == p).unwrap_or(false));
    }
    embed.report(&mut r, "embedding_identity", samples);
    chart.report(&mut r, "chart_roundtrip", samples);

    let mut transport = Tally::default();
    for i in 0..samples {
        let y = if i % 2 == 0 { s.point_on_tbar() } else { s.p4() };
        let x = proj_to_segre(&y).expect("invertible");
        let same = (tbar_cubic(&y).is_zero()) == (segre_cubic(&x).is_zero());
        transport.record(same && segre_to_tbar(&x).map(|b| b == y).unwrap_or(false));
    }
    transport.report(&mut r, "cubic_transport", samples);

    let mut on_s = Tally::default();
    while !on_s.done(samples) {
        let x = s.point_on_segre_cubic();
        match phi_map(&x) {
            Ok(p) => on_s.record(on_x(&p) && phi_inverse(&p).map(|b| b == x).unwrap_or(false)),
            Err(_) => on_s.skipped += 1,
        }
    }
    on_s.report(&mut r, "birational_roundtrip_segre", samples);

    let mut on_xv = Tally::default();
    while !on_xv.done(samples) {
        let p = s.point_on_x();
        match phi_inverse(&p).and_then(|x| phi_map(&x)) {
            Ok(back) => on_xv.record(back == p),
            Err(_) => on_xv.skipped += 1,
        }
    }
    on_xv.report(&mut r, "birational_roundtrip_x", samples);

    let mut varphi = Tally::default();
    while !varphi.done(samples) {
        match varphi_map(&s.lambda()) {
            Ok(y) => varphi.record(tbar_cubic(&y).is_zero()),
            Err(_) => varphi.skipped += 1,
        }
    }
    varphi.report(&mut r, "varphi_image", samples);

    let mut coherence = Tally::default();
    while !coherence.done(samples) {
        let l = s.lambda();
        let pair = weight_ratios_lambda(&l).and_then(|(w1, w2)| {
            let mu = affine_mu_from_lambda(&l)?;
            Ok((w1, w2, lax_weights_mu(&mu)?, double_prime_weights(&mu)?))
        });
        match pair {
            Ok((w1, w2, lax, dp)) => coherence.record(
                baxter_f(&w1, &w2).is_zero()
                    && w1.proj_eq(&lax.gauge_flip())
                    && w2.proj_eq(&dp.gauge_flip()),
            ),
            Err(_) => coherence.skipped += 1,
        }
    }
    coherence.report(&mut r, "lambda_coherence", samples);

    let (entries, verified) = node_entries();
    let count = entries.len();
    r.value("nodes", count);
    r.check(
        "node_census",
        count == 10 && verified == count,
        format!("{count} nodes, {verified} verified"),
    );
    r
}
