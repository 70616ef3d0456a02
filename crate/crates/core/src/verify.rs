//! Self-checks over random inputs, grouped into suites and reported with the
//! worst observed residual per check.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::channels::{choi_state, PauliProbabilities, UnitalChannel};
use crate::compat::{
    equal_p_channels, in_convex_hull, is_compatible_pauli, max_sharpness,
    max_sharpness_direction, polytope_contains, rejection_sample_triples, CompatibilityPolytope,
};
use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::measures::{
    avg_fidelity_mc, avg_fidelity_pauli, lqu_direct_with_w, lqu_pauli, p_max_sorted, p_values,
    quantumness_numerical, quantumness_pauli, t_values,
};
use crate::qcore::{
    haar_bloch_vector, uniform_simplex, unsharpness_luders, unsharpness_uncertainty,
    BinaryMeasurement, Direction, SamplerConfig,
};
use crate::tradeoffs::{
    best_fidelity_search, best_fidelity_unital_closed, best_lqu_search, best_quantumness_search,
    fidelity_bound_check, fidelity_bound_lhs, sharpness_bound_check, SearchConfig,
    counterexample_pm_below_half,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Identities,
    Theorems,
    Oracles,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::All => "all",
            Self::Identities => "identities",
            Self::Theorems => "theorems",
            Self::Oracles => "oracles",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Self::All),
            "identities" => Ok(Self::Identities),
            "theorems" => Ok(Self::Theorems),
            "oracles" => Ok(Self::Oracles),
            other => Err(Error::InvalidConfig(format!("unknown suite '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Worst value seen; compared against `tolerance` in the direction the check states.
    pub observed: f64,
    pub tolerance: f64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Ctx {
    seed: u64,
    samples: usize,
    out: Vec<CheckResult>,
}

impl Ctx {
    fn rng(&self, tag: u64) -> rand_chacha::ChaCha20Rng {
        SamplerConfig { seed: self.seed, count: 1 }.split(tag).rng()
    }

    fn record(&mut self, suite: Suite, name: &str, observed: f64, tolerance: f64, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckResult {
            suite,
            name: name.to_string(),
            passed,
            observed,
            tolerance,
            detail: detail.into(),
        });
    }

    /// Passes when `observed ≤ tolerance`.
    fn at_most(&mut self, suite: Suite, name: &str, observed: f64, tolerance: f64, detail: impl Into<String>) {
        self.record(suite, name, observed, tolerance, observed <= tolerance, detail);
    }
}

fn random_p(rng: &mut impl Rng) -> PauliProbabilities<f64> {
    PauliProbabilities::new(uniform_simplex(rng)).expect("simplex sample")
}

/// Runs one suite (or all of them) with `samples` random draws per check.
pub fn run_suite(suite: Suite, seed: u64, samples: usize) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::InvalidConfig("samples must be positive".into()));
    }
    let mut ctx = Ctx {
        seed,
        samples,
        out: Vec::new(),
    };
    if matches!(suite, Suite::All | Suite::Identities) {
        identities(&mut ctx)?;
    }
    if matches!(suite, Suite::All | Suite::Theorems) {
        theorems(&mut ctx)?;
    }
    if matches!(suite, Suite::All | Suite::Oracles) {
        oracles(&mut ctx)?;
    }
    Ok(VerifyReport {
        suite,
        seed,
        samples,
        checks: ctx.out,
    })
}

fn identities(ctx: &mut Ctx) -> Result<()> {
    const S: Suite = Suite::Identities;
    let n = ctx.samples;
    let mut rng = ctx.rng(1);
    let (mut split, mut pmax_gap, mut round_trip) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..n {
        let p = random_p(&mut rng);
        let pm = p_max_sorted(&p);
        let t = t_values(&p);
        let rhs = quantumness_pauli(&p) + 0.5 * (t[1] * t[1] + t[2] * t[2]);
        split = split.max((1.0 - pm * pm - rhs).abs());
        pmax_gap = pmax_gap.max((p_values(&p).p_max() - pm).abs());
        let back = PauliProbabilities::from_lambdas(p.lambdas())?;
        round_trip = round_trip.max(
            back.probs().iter().zip(p.probs()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max),
        );
    }
    ctx.at_most(S, "pmax_quantumness_split", split, 1e-12, format!("{n} random channels"));
    ctx.at_most(S, "pmax_sorted_equals_max", pmax_gap, 0.0, "exact equality");
    ctx.at_most(S, "lambda_round_trip", round_trip, 1e-14, "p -> lambda -> p");

    let circle = (0..=100)
        .map(|k| {
            let s = k as f64 / 100.0;
            ((3.0 * best_fidelity_unital_closed(s) - 2.0).powi(2) + s * s - 1.0).abs()
        })
        .fold(0.0, f64::max);
    ctx.at_most(S, "fidelity_curve_circle", circle, 1e-14, "101 sharpness values");

    let mut rng = ctx.rng(2);
    let (mut unc, mut lud) = (0.0f64, 0.0f64);
    for _ in 0..n.min(1000) {
        let s: f64 = rng.random();
        let d = Direction::new(Vec3(haar_bloch_vector(&mut rng)))?;
        let povm = BinaryMeasurement::new(s, d)?.to_povm();
        unc = unc.max((unsharpness_uncertainty(&povm) - (1.0 - s * s)).abs());
        lud = lud.max((unsharpness_luders(&povm) - 0.5 * (1.0 - s * s)).abs());
    }
    ctx.at_most(S, "unsharpness_uncertainty", unc, 1e-12, "equals 1 - s^2");
    ctx.at_most(S, "unsharpness_luders", lud, 1e-12, "equals (1 - s^2)/2");
    Ok(())
}

fn theorems(ctx: &mut Ctx) -> Result<()> {
    const S: Suite = Suite::Theorems;
    let n = ctx.samples;
    let grid = 30;
    let cfg = SearchConfig {
        simplex_grid: grid,
        ..SearchConfig::default()
    };
    let (mut above, mut below) = (f64::NEG_INFINITY, 0.0f64);
    let (mut q_gap, mut l_gap, mut vertex_q) = (0.0f64, 0.0f64, 0.0f64);
    for k in 0..=5 {
        let s = k as f64 / 5.0;
        let m = BinaryMeasurement::new(s, Direction::x())?;
        let closed = best_fidelity_unital_closed(s);
        let f = best_fidelity_search(&m, &cfg)?.value;
        above = above.max(f - closed);
        below = below.max(closed - f);
        q_gap = q_gap.max((best_quantumness_search(&m, &cfg, true)?.value - (1.0 - s * s)).abs());
        l_gap = l_gap.max((best_lqu_search(&m, &cfg)?.value - (1.0 - s)).abs());
        let v = CompatibilityPolytope::new(s)?.vertices()[0];
        vertex_q = vertex_q.max((quantumness_pauli(&v) - (1.0 - s * s)).abs());
    }
    ctx.at_most(S, "fidelity_search_not_above_closed", above, 1e-9, "s = 0, 0.2, ..., 1");
    ctx.at_most(S, "fidelity_search_gap", below, 2.0 / grid as f64, format!("grid {grid}"));
    ctx.at_most(S, "quantumness_search_gap", q_gap, 0.01, "principal axis");
    ctx.at_most(S, "quantumness_vertex_attainment", vertex_q, 1e-12, "polytope vertex");
    ctx.at_most(S, "lqu_search_gap", l_gap, 1e-10, "equal-P channels injected");

    let equal_p = (0..100)
        .map(|k| {
            let s = k as f64 / 99.0;
            equal_p_channels(s)
                .map(|c| {
                    c.iter()
                        .map(|p| p_values(p).values.max_abs_diff(&Vec3::new(s, s, s)))
                        .fold(0.0, f64::max)
                })
                .unwrap_or(f64::INFINITY)
        })
        .fold(0.0, f64::max);
    ctx.at_most(S, "equal_p_channels", equal_p, 1e-10, "P_i = s");

    let mut rng = ctx.rng(3);
    let (mut worst, mut tested) = (f64::NEG_INFINITY, 0usize);
    while tested < n {
        let p = random_p(&mut rng);
        if p.max() >= 0.5 {
            worst = worst.max(fidelity_bound_check(&p)?.lhs);
            tested += 1;
        }
    }
    ctx.at_most(S, "fidelity_bound", worst, 1.0 + 1e-12, format!("{tested} channels with p_m >= 1/2"));
    let family = (0..=100)
        .map(|k| {
            let a = 0.5 + 0.5 * k as f64 / 100.0;
            let p = PauliProbabilities::new([a, 1.0 - a, 0.0, 0.0]).expect("valid");
            (fidelity_bound_lhs(&p) - 1.0).abs()
        })
        .fold(0.0, f64::max);
    ctx.at_most(S, "fidelity_bound_equality_family", family, 1e-12, "(a, 1-a, 0, 0)");
    let ce = fidelity_bound_lhs(&counterexample_pm_below_half(0.1)?);
    ctx.record(S, "fidelity_bound_needs_hypothesis", ce, 1.0, ce > 1.0, "(0.4, 0.4, 0.1, 0.1) exceeds 1");

    let mut rng = ctx.rng(4);
    let (mut slack, mut resid) = (f64::INFINITY, 0.0f64);
    for _ in 0..n {
        let c = sharpness_bound_check(&random_p(&mut rng));
        slack = slack.min(c.q_slack);
        resid = resid.max(c.lqu_residual);
    }
    ctx.record(S, "quantumness_slack_nonnegative", slack, -1e-12, slack >= -1e-12, "min over samples");
    ctx.at_most(S, "lqu_plus_pmax_is_one", resid, 1e-12, "max residual");

    let triples = rejection_sample_triples::<f64>(SamplerConfig::new(ctx.seed ^ 5, n)?)?;
    let mut outside = 0usize;
    let mut worst_s = f64::NEG_INFINITY;
    for c in &triples.accepted {
        let s = c.measurement.sharpness();
        if !polytope_contains(&CompatibilityPolytope::new(s)?, &c.p) {
            outside += 1;
        }
        worst_s = worst_s.max(s - max_sharpness(&c.p));
    }
    ctx.at_most(
        S,
        "compatible_in_polytope",
        outside as f64,
        0.0,
        format!("acceptance rate {:.4}", triples.acceptance_rate()),
    );
    ctx.at_most(S, "sharpness_below_pmax", worst_s, 1e-12, "s - P_max");

    let mut rng = ctx.rng(6);
    let mut failures = 0usize;
    for _ in 0..100 {
        let p = random_p(&mut rng);
        let s = max_sharpness(&p);
        let d = max_sharpness_direction(&p);
        if !is_compatible_pauli(&p, &BinaryMeasurement::new(s, d)?).compatible {
            failures += 1;
        }
        if s + 1e-6 <= 1.0 && is_compatible_pauli(&p, &BinaryMeasurement::new(s + 1e-6, d)?).compatible {
            failures += 1;
        }
    }
    ctx.at_most(S, "max_sharpness_tight", failures as f64, 0.0, "100 channels");
    Ok(())
}

fn oracles(ctx: &mut Ctx) -> Result<()> {
    const S: Suite = Suite::Oracles;
    let n = ctx.samples;
    let mut rng = ctx.rng(7);
    let mut worst_sigma = 0.0f64;
    for k in 0..20 {
        let p = random_p(&mut rng);
        let est = avg_fidelity_mc(&UnitalChannel::pauli(p), SamplerConfig::new(ctx.seed, n)?.split(k))?;
        let z = (est.mean - avg_fidelity_pauli(&p)).abs() / est.std_err.max(f64::MIN_POSITIVE);
        worst_sigma = worst_sigma.max(z);
    }
    ctx.at_most(S, "mc_fidelity_sigma", worst_sigma, 4.0, format!("20 channels, {n} states each"));
    let id = avg_fidelity_mc(&UnitalChannel::<f64>::identity(), SamplerConfig::new(ctx.seed, n.min(10_000))?)?;
    ctx.at_most(S, "mc_fidelity_identity", (id.mean - 1.0).abs(), 1e-12, "constant integrand");

    let mut rng = ctx.rng(8);
    let (mut lqu_gap, mut w_gap) = (0.0f64, 0.0f64);
    for _ in 0..n.min(10_000) {
        let p = random_p(&mut rng);
        let r = lqu_direct_with_w(&choi_state(&p))?;
        lqu_gap = lqu_gap.max((r.lqu - lqu_pauli(&p)).abs());
        w_gap = w_gap.max(r.w.max_abs_diff(&Mat3::diag(p_values(&p).values)));
    }
    ctx.at_most(S, "lqu_direct_vs_closed", lqu_gap, 1e-9, "Choi state path");
    ctx.at_most(S, "lqu_w_diagonal", w_gap, 1e-9, "W = diag(P)");

    let mut rng = ctx.rng(9);
    let mut q_gap = 0.0f64;
    let q_cfg = SamplerConfig::new(ctx.seed, n.min(10_000))?;
    for k in 0..5 {
        let p = random_p(&mut rng);
        let q = quantumness_numerical(&UnitalChannel::pauli(p), q_cfg.split(k), 32)?;
        q_gap = q_gap.max((q - quantumness_pauli(&p)).abs());
    }
    ctx.at_most(S, "quantumness_oracle", q_gap, 0.02, "5 channels, basis grid 32");
    let q_id = quantumness_numerical(&UnitalChannel::<f64>::identity(), q_cfg, 32)?;
    ctx.at_most(S, "quantumness_identity", (q_id - 1.0).abs(), 0.03, "normalization 3/2");

    let mut rng = ctx.rng(10);
    let mut disagree = 0usize;
    for k in 0..10 {
        let s = (k as f64 + 0.5) / 10.0;
        let poly = CompatibilityPolytope::new(s)?;
        let verts: Vec<Vec<f64>> = poly.vertices().iter().map(|v| v.probs().to_vec()).collect();
        for _ in 0..100 {
            let p = random_p(&mut rng);
            if polytope_contains(&poly, &p) != in_convex_hull(&verts, &p.probs(), 1e-9) {
                disagree += 1;
            }
        }
    }
    ctx.at_most(S, "polytope_halfspace_vs_hull", disagree as f64, 0.0, "1000 points, LP oracle");
    Ok(())
}
