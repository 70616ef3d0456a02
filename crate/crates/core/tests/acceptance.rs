//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the binary
//! exits non-zero if any fails. Expected values come from the small oracles
//! below, written independently of the library formulas.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha20Rng;

use sharpdist::channels::{choi_state, PauliProbabilities, UnitalChannel};
use sharpdist::compat::{
    equal_p_channels, in_convex_hull, is_compatible_pauli, max_sharpness, polytope_contains,
    rejection_sample_triples, CompatibilityPolytope,
};
use sharpdist::linalg::Vec3;
use sharpdist::measures::{
    avg_fidelity_mc, lqu_direct_with_w, lqu_pauli, p_max_sorted, p_values, quantumness_numerical,
    quantumness_pauli,
};
use sharpdist::qcore::{
    fibonacci_sphere, haar_bloch_vector, uniform_simplex, unsharpness_luders,
    unsharpness_uncertainty, BinaryMeasurement, Direction, SamplerConfig,
};
use sharpdist::tradeoffs::{
    best_fidelity_search, best_lqu_search, best_quantumness_search, compatible_grid,
    counterexample_pm_below_half, fidelity_bound_check, fidelity_bound_lhs,
    sharpness_bound_check, SearchConfig,
};

const EXACT: f64 = 1e-12;
const SEARCH_FIDELITY_TOL: f64 = 0.02;
const SEARCH_QUANTUMNESS_TOL: f64 = 0.01;
const LQU_ATTAIN_TOL: f64 = 1e-10;
const ABOVE_CLOSED_TOL: f64 = 1e-9;
const LQU_CROSS_TOL: f64 = 1e-9;
const MC_SIGMAS: f64 = 4.0;
const QUANTUMNESS_ORACLE_TOL: f64 = 0.02;
const QUANTUMNESS_IDENTITY_TOL: f64 = 0.03;
const CLASSICAL_TOL: f64 = 0.01;
const LINE_TOL: f64 = 1e-6;
const TIGHT_STEP: f64 = 1e-6;
const FIDELITY_RUNTIME: Duration = Duration::from_secs(60);
const IDENTITY_RUNTIME: Duration = Duration::from_secs(5);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha20Rng {
    SamplerConfig { seed, count: 1 }.rng()
}

fn random_p(rng: &mut ChaCha20Rng) -> PauliProbabilities<f64> {
    PauliProbabilities::new(uniform_simplex(rng)).unwrap()
}

fn sharp_grid() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

// ---- oracles ----

fn oracle_sorted(p: [f64; 4]) -> [f64; 4] {
    let mut d = p;
    d.sort_by(|a, b| b.partial_cmp(a).unwrap());
    d
}

fn oracle_p_values(p: [f64; 4]) -> [f64; 3] {
    let pair = |a: usize, b: usize, c: usize, d: usize| 2.0 * ((p[a] * p[b]).sqrt() + (p[c] * p[d]).sqrt());
    [pair(0, 1, 2, 3), pair(0, 2, 1, 3), pair(0, 3, 1, 2)]
}

fn oracle_p_max(p: [f64; 4]) -> f64 {
    oracle_p_values(p).into_iter().fold(0.0, f64::max)
}

fn oracle_fidelity_curve(s: f64) -> f64 {
    (2.0 + (1.0 - s * s).sqrt()) / 3.0
}

fn axis(k: usize) -> Direction<f64> {
    Direction::axis(k)
}

fn unit(v: [f64; 3]) -> Direction<f64> {
    Direction::from_unnormalized(Vec3(v)).unwrap()
}

fn search_cfg(grid: usize, dirs: usize) -> SearchConfig {
    SearchConfig {
        simplex_grid: grid,
        direction_grid: dirs,
        refine_steps: 2,
        inject_candidates: true,
    }
}

// ---- criteria ----

fn c01_fidelity_curve() -> Outcome {
    let start = Instant::now();
    let cfg = search_cfg(60, 1);
    let (mut worst_below, mut worst_above) = (0.0f64, f64::NEG_INFINITY);
    for s in sharp_grid() {
        let m = BinaryMeasurement::new(s, axis(0)).unwrap();
        let got = best_fidelity_search(&m, &cfg).unwrap().value;
        let want = oracle_fidelity_curve(s);
        worst_below = worst_below.max(want - got);
        worst_above = worst_above.max(got - want);
        if s == 0.0 || s == 1.0 {
            ensure((got - want).abs() <= EXACT, || format!("endpoint s={s}: {got} vs {want}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(worst_below <= SEARCH_FIDELITY_TOL, || format!("gap {worst_below}"))?;
    ensure(worst_above <= ABOVE_CLOSED_TOL, || format!("above closed form by {worst_above}"))?;
    ensure(elapsed <= FIDELITY_RUNTIME, || format!("runtime {elapsed:?}"))?;
    Ok(format!("max gap {worst_below:.3e}, max excess {worst_above:.1e}, compute {elapsed:.2?} (limit {FIDELITY_RUNTIME:?})"))
}

fn c02_quantumness() -> Outcome {
    let cfg = search_cfg(60, 3);
    let (mut gap, mut attain, mut generic) = (0.0f64, 0.0f64, f64::NEG_INFINITY);
    let diag = unit([1.0, 1.0, 1.0]);
    for s in sharp_grid() {
        let bound = 1.0 - s * s;
        for k in 0..3 {
            let m = BinaryMeasurement::new(s, axis(k)).unwrap();
            let got = best_quantumness_search(&m, &cfg, true).unwrap().value;
            gap = gap.max((got - bound).abs());
            attain = attain.max((got - bound).abs());
        }
        // polytope vertex q = (cap, 1 - cap, 0, 0) along x
        let cap = (1.0 + (1.0 - s * s).sqrt()) / 2.0;
        let q1 = PauliProbabilities::new([cap, 1.0 - cap, 0.0, 0.0]).unwrap();
        let m = BinaryMeasurement::new(s, axis(0)).unwrap();
        ensure(is_compatible_pauli(&q1, &m).compatible, || format!("vertex incompatible at s={s}"))?;
        attain = attain.max((quantumness_pauli(&q1) - bound).abs());
        let m = BinaryMeasurement::new(s, diag).unwrap();
        generic = generic.max(best_quantumness_search(&m, &cfg, true).unwrap().value - bound);
    }
    ensure(gap <= SEARCH_QUANTUMNESS_TOL, || format!("principal gap {gap}"))?;
    ensure(attain <= EXACT, || format!("vertex attainment residual {attain}"))?;
    ensure(generic <= ABOVE_CLOSED_TOL, || format!("diagonal excess {generic}"))?;
    Ok(format!("attainment residual {attain:.1e}, diagonal max excess {generic:.3e}"))
}

fn c03_lqu() -> Outcome {
    let cfg = search_cfg(60, 3);
    let mut gap = 0.0f64;
    for s in sharp_grid() {
        let m = BinaryMeasurement::new(s, axis(2)).unwrap();
        gap = gap.max((best_lqu_search(&m, &cfg).unwrap().value - (1.0 - s)).abs());
    }
    let mut pv = 0.0f64;
    for k in 0..100 {
        let s = k as f64 / 99.0;
        for c in equal_p_channels(s).unwrap() {
            for v in oracle_p_values(c.probs()) {
                pv = pv.max((v - s).abs());
            }
        }
    }
    ensure(gap <= LQU_ATTAIN_TOL, || format!("search gap {gap}"))?;
    ensure(pv <= LQU_ATTAIN_TOL, || format!("equal-P residual {pv}"))?;
    Ok(format!("search gap {gap:.1e}, P_i - s residual {pv:.1e}"))
}

fn c04_pmax_split() -> Outcome {
    let start = Instant::now();
    let mut r = rng(4);
    let mut worst = 0.0f64;
    let mut lib_gap = 0.0f64;
    for _ in 0..100_000 {
        let p = random_p(&mut r);
        let d = oracle_sorted(p.probs());
        let pmax = 2.0 * ((d[0] * d[1]).sqrt() + (d[2] * d[3]).sqrt());
        let q = (d[0] - d[1]).powi(2) + (d[2] - d[3]).powi(2);
        let t2 = 2.0 * ((d[0] * d[2]).sqrt() - (d[1] * d[3]).sqrt());
        let t3 = 2.0 * ((d[0] * d[3]).sqrt() - (d[1] * d[2]).sqrt());
        worst = worst.max((1.0 - pmax * pmax - q - 0.5 * (t2 * t2 + t3 * t3)).abs());
        lib_gap = lib_gap.max((p_max_sorted(&p) - pmax).abs()).max((quantumness_pauli(&p) - q).abs());
        lib_gap = lib_gap.max((p_values(&p).p_max() - oracle_p_max(p.probs())).abs());
    }
    let elapsed = start.elapsed();
    ensure(worst <= EXACT, || format!("identity residual {worst}"))?;
    ensure(lib_gap <= EXACT, || format!("library vs oracle {lib_gap}"))?;
    ensure(elapsed <= IDENTITY_RUNTIME, || format!("runtime {elapsed:?}"))?;
    Ok(format!("max residual {worst:.1e}, compute {elapsed:.2?} (limit {IDENTITY_RUNTIME:?})"))
}

fn c05_lqu_cross() -> Outcome {
    let mut r = rng(5);
    let (mut lqu, mut w) = (0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let p = random_p(&mut r);
        let res = lqu_direct_with_w(&choi_state(&p)).unwrap();
        lqu = lqu.max((res.lqu - lqu_pauli(&p)).abs());
        lqu = lqu.max((res.lqu - (1.0 - oracle_p_max(p.probs()))).abs());
        let pv = oracle_p_values(p.probs());
        for (i, &pi) in pv.iter().enumerate() {
            for j in 0..3 {
                let want = if i == j { pi } else { 0.0 };
                w = w.max((res.w.0[i][j] - want).abs());
            }
        }
    }
    ensure(lqu <= LQU_CROSS_TOL, || format!("lqu gap {lqu}"))?;
    ensure(w <= LQU_CROSS_TOL, || format!("W gap {w}"))?;
    Ok(format!("lqu gap {lqu:.1e}, W gap {w:.1e}"))
}

fn c06_fidelity_oracle() -> Outcome {
    let mut r = rng(6);
    let mut worst = 0.0f64;
    for k in 0..100u64 {
        let p = random_p(&mut r);
        let cfg = SamplerConfig::new(600 + k, 100_000).unwrap();
        let est = avg_fidelity_mc(&UnitalChannel::pauli(p), cfg).unwrap();
        let want = (1.0 + 2.0 * p.probs()[0]) / 3.0;
        worst = worst.max((est.mean - want).abs() / est.std_err);
    }
    let id = avg_fidelity_mc(&UnitalChannel::<f64>::identity(), SamplerConfig::new(7, 100_000).unwrap()).unwrap();
    ensure(worst <= MC_SIGMAS, || format!("worst deviation {worst} sigma"))?;
    ensure((id.mean - 1.0).abs() <= EXACT, || format!("identity {}", id.mean))?;
    Ok(format!("worst {worst:.2} sigma, identity {:.1e} off", (id.mean - 1.0).abs()))
}

fn c07_quantumness_oracle() -> Outcome {
    let mut r = rng(7);
    let mut worst = 0.0f64;
    for k in 0..20u64 {
        let p = random_p(&mut r);
        let d = oracle_sorted(p.probs());
        let want = (d[0] - d[1]).powi(2) + (d[2] - d[3]).powi(2);
        let cfg = SamplerConfig::new(700 + k, 10_000).unwrap();
        let got = quantumness_numerical(&UnitalChannel::pauli(p), cfg, 32).unwrap();
        worst = worst.max((got - want).abs());
    }
    let id = quantumness_numerical(&UnitalChannel::<f64>::identity(), SamplerConfig::new(77, 10_000).unwrap(), 32).unwrap();
    ensure(worst <= QUANTUMNESS_ORACLE_TOL, || format!("worst gap {worst}"))?;
    ensure((id - 1.0).abs() <= QUANTUMNESS_IDENTITY_TOL, || format!("identity {id}"))?;
    Ok(format!("worst gap {worst:.2e}, identity {id:.4}"))
}

fn c08_unsharpness() -> Outcome {
    let mut r = rng(8);
    let (mut unc, mut lud) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let s: f64 = r.random();
        let n = Direction::new(Vec3(haar_bloch_vector(&mut r))).unwrap();
        let povm = BinaryMeasurement::new(s, n).unwrap().to_povm();
        unc = unc.max((unsharpness_uncertainty(&povm) - (1.0 - s * s)).abs());
        lud = lud.max((unsharpness_luders(&povm) - 0.5 * (1.0 - s * s)).abs());
    }
    ensure(unc <= EXACT && lud <= EXACT, || format!("residuals {unc} {lud}"))?;
    Ok(format!("residuals {unc:.1e}, {lud:.1e}"))
}

fn c09_polytope() -> Outcome {
    let triples = rejection_sample_triples::<f64>(SamplerConfig::new(9, 100_000).unwrap()).unwrap();
    let outside = triples
        .accepted
        .iter()
        .filter(|c| {
            let poly = CompatibilityPolytope::new(c.measurement.sharpness()).unwrap();
            !polytope_contains(&poly, &c.p)
        })
        .count();
    ensure(outside == 0, || format!("{outside} compatible triples outside"))?;

    let mut r = rng(90);
    let (mut disagree, mut inside) = (0usize, 0usize);
    for k in 0..10 {
        let s = (k as f64 + 1.0) / 10.0;
        let cap = (1.0 + (1.0 - s * s).sqrt()) / 2.0;
        // vertices built here, not taken from the library
        let mut verts = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    let mut v = vec![0.0; 4];
                    v[i] = cap;
                    v[j] = 1.0 - cap;
                    verts.push(v);
                }
            }
        }
        let poly = CompatibilityPolytope::new(s).unwrap();
        for _ in 0..1000 {
            let p = random_p(&mut r);
            let hull = in_convex_hull(&verts, &p.probs(), 1e-9);
            inside += hull as usize;
            if hull != polytope_contains(&poly, &p) {
                disagree += 1;
            }
        }
    }
    ensure(disagree == 0, || format!("{disagree} halfspace/hull disagreements"))?;
    Ok(format!(
        "{} triples (acceptance {:.3}), LP agreement on 10000 points ({inside} inside)",
        triples.accepted.len(),
        triples.acceptance_rate()
    ))
}

fn c10_sharpness_tight() -> Outcome {
    let triples = rejection_sample_triples::<f64>(SamplerConfig::new(10, 100_000).unwrap()).unwrap();
    let worst = triples
        .accepted
        .iter()
        .map(|c| c.measurement.sharpness() - oracle_p_max(c.p.probs()))
        .fold(f64::NEG_INFINITY, f64::max);
    ensure(worst <= EXACT, || format!("s exceeds P_max by {worst}"))?;
    let mut r = rng(100);
    let mut skipped = 0;
    for _ in 0..100 {
        let p = random_p(&mut r);
        let pv = oracle_p_values(p.probs());
        let k = (0..3).max_by(|&a, &b| pv[a].partial_cmp(&pv[b]).unwrap()).unwrap();
        let s = max_sharpness(&p);
        let at = BinaryMeasurement::new(s, axis(k)).unwrap();
        ensure(is_compatible_pauli(&p, &at).compatible, || format!("s = P_max rejected for {p:?}"))?;
        if s + TIGHT_STEP > 1.0 {
            skipped += 1;
            continue;
        }
        let past = BinaryMeasurement::new(s + TIGHT_STEP, axis(k)).unwrap();
        ensure(!is_compatible_pauli(&p, &past).compatible, || format!("s = P_max + step accepted for {p:?}"))?;
    }
    Ok(format!("max s - P_max {worst:.1e}; {skipped} channels with P_max + 1e-6 > 1 skipped"))
}

fn c11_fidelity_bound() -> Outcome {
    let mut r = rng(11);
    let (mut worst, mut n) = (f64::NEG_INFINITY, 0);
    while n < 100_000 {
        let p = random_p(&mut r);
        let d = oracle_sorted(p.probs());
        if d[0] < 0.5 {
            continue;
        }
        n += 1;
        let c = fidelity_bound_check(&p).unwrap();
        let want = (2.0 * d[0] - 1.0).powi(2) + oracle_p_max(p.probs()).powi(2);
        ensure((c.lhs - want).abs() <= EXACT, || format!("lhs {} vs oracle {want}", c.lhs))?;
        ensure(c.holds, || format!("bound fails at {p:?}"))?;
        worst = worst.max(c.lhs);
    }
    ensure(worst <= 1.0 + EXACT, || format!("worst lhs {worst}"))?;
    let mut family = 0.0f64;
    for k in 0..=1000 {
        let a = 0.5 + 0.5 * k as f64 / 1000.0;
        let p = PauliProbabilities::new([a, 1.0 - a, 0.0, 0.0]).unwrap();
        family = family.max((fidelity_bound_check(&p).unwrap().lhs - 1.0).abs());
    }
    ensure(family <= EXACT, || format!("family residual {family}"))?;
    let ce = counterexample_pm_below_half(0.1).unwrap();
    ensure(ce.probs() == [0.4, 0.4, 0.1, 0.1], || format!("{ce:?}"))?;
    let lhs = fidelity_bound_lhs(&ce);
    ensure(lhs > 1.0, || format!("counterexample lhs {lhs}"))?;
    ensure(fidelity_bound_check(&ce).is_err(), || "precondition not enforced".into())?;
    Ok(format!("worst lhs {worst:.12}, family residual {family:.1e}, counterexample lhs {lhs:.4}"))
}

fn c12_sharpness_bound() -> Outcome {
    let mut r = rng(12);
    let (mut slack, mut resid) = (f64::INFINITY, 0.0f64);
    for _ in 0..100_000 {
        let p = random_p(&mut r);
        let c = sharpness_bound_check(&p);
        slack = slack.min(c.q_slack);
        resid = resid.max(c.lqu_residual);
    }
    ensure(resid <= EXACT, || format!("lqu residual {resid}"))?;
    ensure(slack >= -EXACT, || format!("q slack {slack}"))?;
    Ok(format!("min q_slack {slack:.3e}, max lqu residual {resid:.1e}"))
}

fn c13_sharp_classical() -> Outcome {
    let cfg = search_cfg(60, 1);
    let mut dirs: Vec<Direction<f64>> = (0..3).map(axis).collect();
    dirs.extend(fibonacci_sphere::<f64>(17).into_iter().map(|v| Direction::from_unnormalized(v).unwrap()));
    let (mut q, mut l, mut found) = (0.0f64, 0.0f64, 0usize);
    for d in &dirs {
        let m = BinaryMeasurement::new(1.0, *d).unwrap();
        let set = compatible_grid(&m, &cfg).unwrap();
        ensure(!set.is_empty(), || format!("no compatible channel for {d:?}"))?;
        found += set.len();
        for p in &set {
            q = q.max(quantumness_pauli(p));
            l = l.max(lqu_pauli(p));
        }
    }
    ensure(q <= CLASSICAL_TOL && l <= CLASSICAL_TOL, || format!("quantumness {q}, lqu {l}"))?;
    Ok(format!("{found} compatible channels over 20 directions, max Q {q:.1e}, max L {l:.1e}"))
}

fn c14_sharp_geometry() -> Outcome {
    let cfg = search_cfg(60, 1);
    let m = BinaryMeasurement::new(1.0, axis(0)).unwrap();
    let set = compatible_grid(&m, &cfg).unwrap();
    ensure(set.len() > 2, || format!("only {} points on the x line", set.len()))?;
    let mut off = 0.0f64;
    for p in &set {
        let q = p.probs();
        off = off.max((q[0] - q[1]).abs()).max((q[2] - q[3]).abs()).max((q[0] + q[2] - 0.5).abs());
    }
    ensure(off <= LINE_TOL, || format!("distance from line {off}"))?;
    let mut center_off = 0.0f64;
    for v in [[1.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [1.0, -2.0, 0.0], [1.0, 1.0, 1.0]] {
        let m = BinaryMeasurement::new(1.0, unit(v)).unwrap();
        let set = compatible_grid(&m, &cfg).unwrap();
        ensure(!set.is_empty(), || format!("center missing for {v:?}"))?;
        for p in &set {
            for x in p.probs() {
                center_off = center_off.max((x - 0.25).abs());
            }
        }
    }
    ensure(center_off <= LINE_TOL, || format!("off-center by {center_off}"))?;
    Ok(format!("{} x-line points within {off:.1e}; generic directions center-only", set.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("fidelity tradeoff curve", c01_fidelity_curve),
        ("quantumness tradeoff", c02_quantumness),
        ("lqu tradeoff", c03_lqu),
        ("P_max / quantumness split identity", c04_pmax_split),
        ("lqu Choi-state cross-validation", c05_lqu_cross),
        ("Monte Carlo fidelity oracle", c06_fidelity_oracle),
        ("quantumness numerical oracle", c07_quantumness_oracle),
        ("general POVM unsharpness", c08_unsharpness),
        ("compatible channels lie in polytope", c09_polytope),
        ("best sharpness equals P_max", c10_sharpness_tight),
        ("single-channel fidelity bound", c11_fidelity_bound),
        ("single-channel quantumness and lqu bounds", c12_sharpness_bound),
        ("sharp measurements leave classical channels", c13_sharp_classical),
        ("sharp compatible set geometry", c14_sharp_geometry),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{:02}] {name}: {detail} ({t:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{:02}] {name}: {detail} ({t:.2?})", i + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
