use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::closed::{
    best_fidelity_unital_closed, best_lqu_unital_closed, best_quantumness_unital_closed,
};
use crate::channels::PauliProbabilities;
use crate::compat::{is_compatible_pauli, equal_p_channels, simplex_grid, CompatibilityPolytope};
use crate::error::{Error, Result};
use crate::measures::{corrected_fidelity_pauli, lqu_pauli, quantumness_pauli};
use crate::qcore::{fibonacci_sphere, BinaryMeasurement, Direction};
use crate::real::Real;

/// Grid-search knobs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Subdivisions per simplex edge.
    pub simplex_grid: usize,
    /// Number of measurement directions tried: the principal axes first, then
    /// a Fibonacci lattice for the rest.
    pub direction_grid: usize,
    /// Local refinement passes, each halving the step.
    pub refine_steps: usize,
    /// Add the polytope vertices and the equal-P channels as candidates.
    pub inject_candidates: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            simplex_grid: 60,
            direction_grid: 3,
            refine_steps: 2,
            inject_candidates: true,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.simplex_grid == 0 || self.direction_grid == 0 {
            return Err(Error::InvalidConfig(
                "simplex_grid and direction_grid must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TradeoffKind {
    Fidelity,
    Quantumness,
    Lqu,
}

impl TradeoffKind {
    pub fn closed_form<T: Real>(self, s: T) -> T {
        match self {
            Self::Fidelity => best_fidelity_unital_closed(s),
            Self::Quantumness => best_quantumness_unital_closed(s),
            Self::Lqu => best_lqu_unital_closed(s),
        }
    }

    /// Per-channel objective maximized by the search.
    pub fn objective<T: Real>(self, p: &PauliProbabilities<T>) -> T {
        match self {
            Self::Fidelity => corrected_fidelity_pauli(p),
            Self::Quantumness => quantumness_pauli(p),
            Self::Lqu => lqu_pauli(p),
        }
    }
}

impl fmt::Display for TradeoffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fidelity => "fidelity",
            Self::Quantumness => "quantumness",
            Self::Lqu => "lqu",
        })
    }
}

impl FromStr for TradeoffKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fidelity" => Ok(Self::Fidelity),
            "quantumness" => Ok(Self::Quantumness),
            "lqu" => Ok(Self::Lqu),
            other => Err(Error::InvalidConfig(format!("unknown tradeoff kind '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TradeoffPoint<T> {
    pub s: T,
    pub closed_form: T,
    pub searched: T,
    /// `closed_form − searched`.
    pub gap: T,
    pub grid_resolution: usize,
}

/// Best compatible channel found.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome<T> {
    pub value: T,
    pub argmax: PauliProbabilities<T>,
    pub direction: Direction<T>,
}

/// Principal axes, then Fibonacci directions, `count` in total.
pub fn search_directions<T: Real>(count: usize) -> Vec<Direction<T>> {
    let mut out: Vec<Direction<T>> = (0..count.min(3)).map(Direction::axis).collect();
    if count > 3 {
        out.extend(
            fibonacci_sphere::<T>(count - 3)
                .into_iter()
                .map(|v| Direction::from_unnormalized(v).expect("lattice points are unit vectors")),
        );
    }
    out
}

fn lattice_point<T: Real>(k: [usize; 4], n: usize) -> PauliProbabilities<T> {
    let n = T::lit(n as f64);
    PauliProbabilities::clamped(k.map(|x| T::lit(x as f64) / n))
}

fn injected<T: Real>(s: T) -> Vec<PauliProbabilities<T>> {
    let mut out = CompatibilityPolytope::new(s)
        .map(|p| p.vertices())
        .unwrap_or_default();
    if let Ok(r) = equal_p_channels(s) {
        out.extend(r);
    }
    out
}

/// Grid points (and injected candidates) compatible with `m`, in grid order.
pub fn compatible_grid<T: Real>(
    m: &BinaryMeasurement<T>,
    cfg: &SearchConfig,
) -> Result<Vec<PauliProbabilities<T>>> {
    cfg.validate()?;
    let n = cfg.simplex_grid;
    let mut out: Vec<PauliProbabilities<T>> = simplex_grid(n)
        .map(|k| lattice_point(k, n))
        .filter(|p| is_compatible_pauli(p, m).compatible)
        .collect();
    if cfg.inject_candidates {
        out.extend(
            injected(m.sharpness())
                .into_iter()
                .filter(|p| is_compatible_pauli(p, m).compatible),
        );
    }
    Ok(out)
}

/// Larger value wins; equal values go to the lexicographically smaller `p`.
fn better<T: Real>(a: (T, &PauliProbabilities<T>), b: (T, &PauliProbabilities<T>)) -> bool {
    match a.0.partial_cmp(&b.0) {
        Some(Ordering::Greater) => true,
        Some(Ordering::Equal) => a.1.probs().partial_cmp(&b.1.probs()) == Some(Ordering::Less),
        _ => false,
    }
}

fn search_direction<T: Real>(
    kind: TradeoffKind,
    m: &BinaryMeasurement<T>,
    cfg: &SearchConfig,
) -> Option<(T, PauliProbabilities<T>)> {
    let n = cfg.simplex_grid;
    let mut best: Option<(T, PauliProbabilities<T>)> = None;
    let consider = |p: PauliProbabilities<T>, best: &mut Option<(T, PauliProbabilities<T>)>| {
        if !is_compatible_pauli(&p, m).compatible {
            return;
        }
        let v = kind.objective(&p);
        if best.as_ref().is_none_or(|b| better((v, &p), (b.0, &b.1))) {
            *best = Some((v, p));
        }
    };
    for k in simplex_grid(n) {
        consider(lattice_point(k, n), &mut best);
    }
    if cfg.inject_candidates {
        for p in injected(m.sharpness()) {
            consider(p, &mut best);
        }
    }

    // local lattice of offsets in {-2..2}·h/2 around the incumbent, recentred
    // until it stops improving, then shrunk by half
    let mut h = T::one() / T::lit(n as f64);
    for _ in 0..cfg.refine_steps {
        let step = h * T::half();
        for _ in 0..1000 {
            let Some((_, cur)) = best else { break };
            let before = best;
            let c = cur.probs();
            for a in -2i32..=2 {
                for b in -2i32..=2 {
                    for d in -2i32..=2 {
                        let z = [-(a + b + d), a, b, d];
                        if z == [0; 4] {
                            continue;
                        }
                        let q: [T; 4] = std::array::from_fn(|k| c[k] + step * T::lit(z[k] as f64));
                        if q.iter().any(|&x| x < T::zero()) {
                            continue;
                        }
                        consider(PauliProbabilities::clamped(q), &mut best);
                    }
                }
            }
            if best == before {
                break;
            }
        }
        h *= T::half();
    }
    best
}

fn search_over<T: Real>(
    kind: TradeoffKind,
    s: T,
    directions: &[Direction<T>],
    cfg: &SearchConfig,
) -> Result<SearchOutcome<T>> {
    cfg.validate()?;
    let mut out: Option<SearchOutcome<T>> = None;
    for d in directions {
        let m = BinaryMeasurement::new(s, *d)?;
        if let Some((value, argmax)) = search_direction(kind, &m, cfg) {
            if out.as_ref().is_none_or(|o| better((value, &argmax), (o.value, &o.argmax))) {
                out = Some(SearchOutcome {
                    value,
                    argmax,
                    direction: *d,
                });
            }
        }
    }
    // the depolarizing center is compatible with everything, so a grid of
    // any resolution ≥ 1 that contains it cannot come back empty
    out.ok_or_else(|| Error::InvalidConfig("no compatible channel on the search grid".into()))
}

/// Best corrected fidelity over compatible Pauli channels, maximized over the
/// configured direction set (rotations make the measurement direction free).
pub fn best_fidelity_search<T: Real>(
    m: &BinaryMeasurement<T>,
    cfg: &SearchConfig,
) -> Result<SearchOutcome<T>> {
    search_over(
        TradeoffKind::Fidelity,
        m.sharpness(),
        &search_directions(cfg.direction_grid),
        cfg,
    )
}

/// With `restrict_to_pauli` the measurement direction is kept as given;
/// otherwise the configured direction set is searched.
pub fn best_quantumness_search<T: Real>(
    m: &BinaryMeasurement<T>,
    cfg: &SearchConfig,
    restrict_to_pauli: bool,
) -> Result<SearchOutcome<T>> {
    let dirs = if restrict_to_pauli {
        vec![m.direction()]
    } else {
        search_directions(cfg.direction_grid)
    };
    search_over(TradeoffKind::Quantumness, m.sharpness(), &dirs, cfg)
}

pub fn best_lqu_search<T: Real>(
    m: &BinaryMeasurement<T>,
    cfg: &SearchConfig,
) -> Result<SearchOutcome<T>> {
    search_over(
        TradeoffKind::Lqu,
        m.sharpness(),
        &search_directions(cfg.direction_grid),
        cfg,
    )
}

/// One [`TradeoffPoint`] per sharpness value.
pub fn scan<T: Real>(kind: TradeoffKind, s_values: &[T], cfg: &SearchConfig) -> Result<Vec<TradeoffPoint<T>>> {
    cfg.validate()?;
    if s_values.is_empty() {
        return Err(Error::InvalidConfig("scan needs at least one sharpness value".into()));
    }
    let dirs = search_directions(cfg.direction_grid);
    s_values
        .iter()
        .map(|&s| {
            let searched = search_over(kind, s, &dirs, cfg)?.value;
            let closed_form = kind.closed_form(s);
            Ok(TradeoffPoint {
                s,
                closed_form,
                searched,
                gap: closed_form - searched,
                grid_resolution: cfg.simplex_grid,
            })
        })
        .collect()
}
