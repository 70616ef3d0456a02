use serde_json::{json, Value};
use sharpdist::channels::{PauliProbabilities, UnitalChannel};
use sharpdist::compat::{
    is_compatible_pauli, is_compatible_unital, max_sharpness, rejection_sample_fixed,
    rejection_sample_triples, simplex_grid, CompatibilityPolytope, RejectionReport,
};
use sharpdist::linalg::Mat3;
use sharpdist::measures::MeasureReport;
use sharpdist::qcore::{sample_haar_pure, SamplerConfig};
use sharpdist::tradeoffs::{scan as run_scan, SearchConfig, TradeoffKind};
use sharpdist::verify::{run_suite, Suite};

use crate::format::{json_num, json_nums, num};
use crate::output::{csv, emit, json_text, RunManifest};
use crate::{parse, ChannelArgs, CliError, Emit, Format, SampleKind, Status};

fn bool_cell(b: bool) -> String {
    b.to_string()
}

fn matrix_json(m: &Mat3<f64>) -> Value {
    Value::Array(m.0.iter().map(|row| json_nums(row)).collect())
}

fn channel_params(ch: &ChannelArgs) -> Value {
    json!({ "p": ch.p, "t": ch.t })
}

fn finish(
    command: &str,
    params: Value,
    seed: u64,
    emit_args: &Emit,
    data: String,
) -> Result<Status, CliError> {
    let manifest = RunManifest::new(command, params, seed);
    emit(&data, emit_args.out.as_deref(), &manifest)?;
    Ok(Status::Ok)
}

pub fn check(ch: &ChannelArgs, s: f64, n: &str, emit_args: &Emit) -> Result<Status, CliError> {
    let c = parse::channel(ch.p.as_deref(), ch.t.as_deref())?;
    let m = parse::measurement(s, n)?;
    let v = is_compatible_unital(&c, &m);
    let p = c.pauli_part();
    let member = CompatibilityPolytope::new(s)?.contains(&p);
    let pv = v.p_values.to_f64();
    let p_max = v.p_values.p_max();
    eprintln!(
        "compatible: {}  lhs = {}  P_max = {}  in polytope: {}",
        v.compatible,
        num(v.lhs),
        num(p_max),
        member
    );
    let data = match emit_args.format.unwrap_or(Format::Json) {
        Format::Json => json_text(&json!({
            "compatible": v.compatible,
            "lhs": json_num(v.lhs),
            "p_values": json_nums(&pv),
            "p_max": json_num(p_max),
            "polytope_member": member,
            "p": json_nums(&p.to_f64()),
        })),
        Format::Csv => csv(
            &["compatible", "lhs", "P1", "P2", "P3", "p_max", "polytope_member"],
            &[vec![
                bool_cell(v.compatible),
                num(v.lhs),
                num(pv[0]),
                num(pv[1]),
                num(pv[2]),
                num(p_max),
                bool_cell(member),
            ]],
        ),
    };
    let mut params = channel_params(ch);
    params["s"] = json!(s);
    params["n"] = json!(n);
    finish("check", params, 0, emit_args, data)
}

pub fn info(ch: &ChannelArgs, emit_args: &Emit) -> Result<Status, CliError> {
    let c: UnitalChannel<f64> = parse::channel(ch.p.as_deref(), ch.t.as_deref())?;
    let r = MeasureReport::unital(&c);
    let p = c.pauli_part();
    let s_max = max_sharpness(&p);
    let pv = r.p_values.to_f64();
    eprintln!("p = ({})", p.to_f64().map(num).join(", "));
    for (k, v) in [
        ("avg_fidelity", r.avg_fidelity),
        ("corrected_fidelity", r.corrected_fidelity),
        ("quantumness", r.quantumness),
        ("lqu", r.lqu),
        ("p_max", r.p_max),
        ("max_sharpness", s_max),
    ] {
        eprintln!("{k:>20}  {}", num(v));
    }
    let data = match emit_args.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut v = json!({
                "p": json_nums(&p.to_f64()),
                "avg_fidelity": json_num(r.avg_fidelity),
                "corrected_fidelity": json_num(r.corrected_fidelity),
                "quantumness": json_num(r.quantumness),
                "lqu": json_num(r.lqu),
                "p_values": json_nums(&pv),
                "p_max": json_num(r.p_max),
                "max_sharpness": json_num(s_max),
            });
            if ch.t.is_some() {
                v["r_in"] = matrix_json(&c.r_in().matrix());
                v["r_out"] = matrix_json(&c.r_out().matrix());
            }
            json_text(&v)
        }
        Format::Csv => csv(
            &[
                "p0", "p1", "p2", "p3", "avg_fidelity", "corrected_fidelity", "quantumness", "lqu",
                "P1", "P2", "P3", "p_max", "max_sharpness",
            ],
            &[p.to_f64()
                .into_iter()
                .chain([r.avg_fidelity, r.corrected_fidelity, r.quantumness, r.lqu])
                .chain(pv)
                .chain([r.p_max, s_max])
                .map(num)
                .collect()],
        ),
    };
    finish("info", channel_params(ch), 0, emit_args, data)
}

/// `steps` evenly spaced values from 0 to 1 inclusive.
fn sharpness_values(steps: usize) -> Vec<f64> {
    match steps {
        1 => vec![0.0],
        _ => (0..steps).map(|k| k as f64 / (steps - 1) as f64).collect(),
    }
}

pub fn scan(
    kind: TradeoffKind,
    s_steps: usize,
    cfg: SearchConfig,
    seed: u64,
    emit_args: &Emit,
) -> Result<Status, CliError> {
    if s_steps == 0 {
        return Err(CliError::Usage("--s-steps must be at least 1".into()));
    }
    cfg.validate()?;
    let points = run_scan(kind, &sharpness_values(s_steps), &cfg)?;
    eprintln!("{:>8}  {:>14}  {:>14}  {:>10}", "s", "closed_form", "searched", "gap");
    for pt in &points {
        eprintln!(
            "{:>8}  {:>14}  {:>14}  {:>10}",
            num(pt.s),
            num(pt.closed_form),
            num(pt.searched),
            num(pt.gap)
        );
    }
    let data = match emit_args.format.unwrap_or(Format::Csv) {
        Format::Csv => csv(
            &["s", "closed_form", "searched", "gap", "grid_resolution"],
            &points
                .iter()
                .map(|pt| {
                    vec![
                        num(pt.s),
                        num(pt.closed_form),
                        num(pt.searched),
                        num(pt.gap),
                        pt.grid_resolution.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Json => json_text(&Value::Array(
            points
                .iter()
                .map(|pt| {
                    json!({
                        "s": json_num(pt.s),
                        "closed_form": json_num(pt.closed_form),
                        "searched": json_num(pt.searched),
                        "gap": json_num(pt.gap),
                        "grid_resolution": pt.grid_resolution,
                    })
                })
                .collect(),
        )),
    };
    let params = json!({
        "kind": kind.to_string(),
        "s_steps": s_steps,
        "grid": cfg.simplex_grid,
        "directions": cfg.direction_grid,
        "refine": cfg.refine_steps,
        "inject_candidates": cfg.inject_candidates,
    });
    finish("scan", params, seed, emit_args, data)
}

pub fn region(s: f64, n: &str, grid: usize, all: bool, emit_args: &Emit) -> Result<Status, CliError> {
    if grid == 0 {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    let m = parse::measurement(s, n)?;
    let poly = CompatibilityPolytope::new(s)?;
    let header = ["p0", "p1", "p2", "p3", "lhs", "compatible", "in_polytope"];
    let mut rows = Vec::new();
    let (mut total, mut compatible, mut outside) = (0usize, 0usize, 0usize);
    for k in simplex_grid(grid) {
        total += 1;
        let p = PauliProbabilities::new(k.map(|x| x as f64 / grid as f64))?;
        let v = is_compatible_pauli(&p, &m);
        let inside = poly.contains(&p);
        if v.compatible {
            compatible += 1;
            if !inside {
                outside += 1;
            }
        }
        if v.compatible || all {
            rows.push((p, v.lhs, v.compatible, inside));
        }
    }
    eprintln!("grid points: {total}  compatible: {compatible}  compatible outside polytope: {outside}");
    let data = match emit_args.format.unwrap_or(Format::Csv) {
        Format::Csv => csv(
            &header,
            &rows
                .iter()
                .map(|(p, lhs, c, inside)| {
                    let mut r: Vec<String> = p.to_f64().into_iter().map(num).collect();
                    r.extend([num(*lhs), bool_cell(*c), bool_cell(*inside)]);
                    r
                })
                .collect::<Vec<_>>(),
        ),
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|(p, lhs, c, inside)| {
                    json!({
                        "p": json_nums(&p.to_f64()),
                        "lhs": json_num(*lhs),
                        "compatible": c,
                        "in_polytope": inside,
                    })
                })
                .collect(),
        )),
    };
    let params = json!({ "s": s, "n": n, "grid": grid, "all": all });
    finish("region", params, 0, emit_args, data)
}

pub fn verify(suite: Suite, seed: u64, samples: usize, emit_args: &Emit) -> Result<Status, CliError> {
    let report = run_suite(suite, seed, samples)?;
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(4);
    eprintln!("{:<10}  {:<width$}  {:<4}  {:>14}  {:>10}", "suite", "check", "ok", "observed", "tolerance");
    for c in &report.checks {
        eprintln!(
            "{:<10}  {:<width$}  {:<4}  {:>14}  {:>10}",
            c.suite.to_string(),
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            num(c.observed),
            num(c.tolerance)
        );
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    eprintln!("{} checks, {} failed", report.checks.len(), failed);
    let data = match emit_args.format.unwrap_or(Format::Json) {
        Format::Json => json_text(&json!({
            "suite": report.suite.to_string(),
            "seed": report.seed,
            "samples": report.samples,
            "all_passed": report.all_passed(),
            "checks": report.checks.iter().map(|c| json!({
                "suite": c.suite.to_string(),
                "name": c.name,
                "passed": c.passed,
                "observed": json_num(c.observed),
                "tolerance": json_num(c.tolerance),
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv(
            &["suite", "name", "passed", "observed", "tolerance"],
            &report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.suite.to_string(),
                        c.name.clone(),
                        bool_cell(c.passed),
                        num(c.observed),
                        num(c.tolerance),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    let params = json!({ "suite": suite.to_string(), "samples": samples });
    finish("verify", params, seed, emit_args, data)?;
    Ok(if report.all_passed() { Status::Ok } else { Status::Violation })
}

pub fn sample(
    what: SampleKind,
    seed: u64,
    samples: usize,
    s: Option<f64>,
    n: Option<&str>,
    emit_args: &Emit,
) -> Result<Status, CliError> {
    let config = SamplerConfig::new(seed, samples)?;
    let mut params = json!({ "samples": samples });
    let (header, rows): (Vec<&str>, Vec<Vec<f64>>) = match what {
        SampleKind::States => {
            if s.is_some() || n.is_some() {
                return Err(CliError::Usage("--s and --n apply to 'sample channels' only".into()));
            }
            params["what"] = json!("states");
            let rows = sample_haar_pure::<f64>(config)
                .map(|st| st.bloch().to_f64().to_vec())
                .collect();
            (vec!["x", "y", "z"], rows)
        }
        SampleKind::Channels => {
            params["what"] = json!("channels");
            let report: RejectionReport<f64> = match (s, n) {
                (Some(s), Some(n)) => {
                    params["s"] = json!(s);
                    params["n"] = json!(n);
                    rejection_sample_fixed(&parse::measurement(s, n)?, config)?
                }
                (None, None) => rejection_sample_triples(config)?,
                _ => return Err(CliError::Usage("--s and --n must be given together".into())),
            };
            eprintln!(
                "accepted {} of {} draws (rate {})",
                report.accepted.len(),
                report.attempts,
                num(report.acceptance_rate())
            );
            let rows = report
                .accepted
                .iter()
                .map(|smp| {
                    let lhs = is_compatible_pauli(&smp.p, &smp.measurement).lhs;
                    let mut r = smp.p.to_f64().to_vec();
                    r.push(smp.measurement.sharpness());
                    r.extend(smp.measurement.direction().vec().to_f64());
                    r.push(lhs);
                    r
                })
                .collect();
            (vec!["p0", "p1", "p2", "p3", "s", "nx", "ny", "nz", "lhs"], rows)
        }
    };
    let data = match emit_args.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut h = vec!["index"];
            h.extend(&header);
            csv(
                &h,
                &rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| std::iter::once(i.to_string()).chain(r.iter().map(|&x| num(x))).collect())
                    .collect::<Vec<_>>(),
            )
        }
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|r| {
                    Value::Object(
                        header.iter().zip(r).map(|(k, &x)| (k.to_string(), json_num(x))).collect(),
                    )
                })
                .collect(),
        )),
    };
    finish("sample", params, seed, emit_args, data)
}
