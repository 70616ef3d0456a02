use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{is_compatible_pauli, CompatibilityPolytope};
use crate::channels::PauliProbabilities;
use crate::error::Result;
use crate::linalg::Vec3;
use crate::qcore::{haar_bloch_vector, uniform_simplex, BinaryMeasurement, Direction, SamplerConfig};
use crate::real::Real;

/// Barycentric lattice `{k/n : k ∈ ℕ⁴, Σk = n}` in lexicographic order of `k`.
#[derive(Clone, Debug)]
pub struct SimplexGrid {
    n: usize,
    k: [usize; 3],
    done: bool,
}

pub fn simplex_grid(n: usize) -> SimplexGrid {
    SimplexGrid {
        n,
        k: [0; 3],
        done: n == 0,
    }
}

impl SimplexGrid {
    pub fn len(&self) -> usize {
        let n = self.n;
        if n == 0 {
            return 0;
        }
        (n + 1) * (n + 2) * (n + 3) / 6
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

impl Iterator for SimplexGrid {
    type Item = [usize; 4];

    fn next(&mut self) -> Option<[usize; 4]> {
        if self.done {
            return None;
        }
        let [a, b, c] = self.k;
        let out = [a, b, c, self.n - a - b - c];
        // advance
        if a + b + c < self.n {
            self.k[2] += 1;
        } else if a + b < self.n {
            self.k[1] += 1;
            self.k[2] = 0;
        } else if a < self.n {
            self.k = [a + 1, 0, 0];
        } else {
            self.done = true;
        }
        Some(out)
    }
}

/// A compatible channel together with the measurement it was tested against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompatibleSample<T> {
    pub p: PauliProbabilities<T>,
    pub measurement: BinaryMeasurement<T>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RejectionReport<T> {
    pub accepted: Vec<CompatibleSample<T>>,
    pub attempts: usize,
}

impl<T> RejectionReport<T> {
    pub fn acceptance_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.accepted.len() as f64 / self.attempts as f64
        }
    }
}

/// `config.count` uniform simplex draws tested against one fixed measurement.
pub fn rejection_sample_fixed<T: Real>(
    m: &BinaryMeasurement<T>,
    config: SamplerConfig,
) -> Result<RejectionReport<T>> {
    config.validate()?;
    let mut rng = config.rng();
    let mut accepted = Vec::new();
    for _ in 0..config.count {
        let p = PauliProbabilities::clamped(uniform_simplex(&mut rng).map(T::lit));
        if is_compatible_pauli(&p, m).compatible {
            accepted.push(CompatibleSample { p, measurement: *m });
        }
    }
    Ok(RejectionReport {
        accepted,
        attempts: config.count,
    })
}

/// Draws `(p, s, n̂)` with `p` uniform on the simplex, `s` uniform on `[0, 1]`
/// and `n̂` uniform on the sphere until `config.count` compatible triples are found.
pub fn rejection_sample_triples<T: Real>(config: SamplerConfig) -> Result<RejectionReport<T>> {
    config.validate()?;
    let mut rng = config.rng();
    let mut accepted = Vec::with_capacity(config.count);
    let mut attempts = 0;
    while accepted.len() < config.count {
        attempts += 1;
        let p = PauliProbabilities::clamped(uniform_simplex(&mut rng).map(T::lit));
        let s = T::lit(rng.random::<f64>());
        let n = Direction::from_unnormalized(Vec3(haar_bloch_vector(&mut rng).map(T::lit)))?;
        let m = BinaryMeasurement::new(s, n)?;
        if is_compatible_pauli(&p, &m).compatible {
            accepted.push(CompatibleSample { p, measurement: m });
        }
    }
    Ok(RejectionReport { accepted, attempts })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeTouchReport {
    pub samples: usize,
    /// Samples within `radius` of a polytope edge that passed the criterion.
    pub compatible_near_edge: usize,
    /// Smallest edge distance among those compatible samples.
    pub closest_compatible: Option<f64>,
}

/// Probes the neighbourhood of the `Δ_s` edges for compatible channels.
///
/// Each sample picks `s` from `s_values`, an edge, a point on it, and moves
/// towards a uniform simplex point by at most `radius`, so it stays a valid
/// channel within `radius` of the edge.
pub fn edge_touch_search(
    n: &Direction<f64>,
    s_values: &[f64],
    radius: f64,
    config: SamplerConfig,
) -> Result<EdgeTouchReport> {
    config.validate()?;
    let polys = s_values
        .iter()
        .map(|&s| CompatibilityPolytope::new(s))
        .collect::<Result<Vec<_>>>()?;
    let measurements = s_values
        .iter()
        .map(|&s| BinaryMeasurement::new(s, *n))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = config.rng();
    let mut report = EdgeTouchReport {
        samples: config.count,
        compatible_near_edge: 0,
        closest_compatible: None,
    };
    if polys.is_empty() {
        return Ok(report);
    }
    for _ in 0..config.count {
        let idx = rng.random_range(0..polys.len());
        let poly = &polys[idx];
        let verts = poly.vertices();
        let edges = poly.edges();
        let (a, b) = edges[rng.random_range(0..edges.len())];
        let t: f64 = rng.random();
        let (va, vb) = (verts[a].probs(), verts[b].probs());
        let on_edge: [f64; 4] = std::array::from_fn(|k| va[k] + t * (vb[k] - va[k]));
        let q = uniform_simplex(&mut rng);
        let gap = (0..4).map(|k| (q[k] - on_edge[k]).powi(2)).sum::<f64>().sqrt();
        let eps = if gap > 0.0 { radius * rng.random::<f64>() / gap } else { 0.0 };
        let p = PauliProbabilities::clamped(std::array::from_fn(|k| {
            on_edge[k] + eps.min(1.0) * (q[k] - on_edge[k])
        }));
        if is_compatible_pauli(&p, &measurements[idx]).compatible {
            let d = poly.distance_to_edges(&p);
            report.compatible_near_edge += 1;
            report.closest_compatible = Some(report.closest_compatible.map_or(d, |c| c.min(d)));
        }
    }
    Ok(report)
}
