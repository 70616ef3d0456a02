use serde::{Deserialize, Serialize};

use crate::channels::PauliProbabilities;
use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::measures::PValues;
use crate::real::{tol, Real};

/// Truncated Pauli tetrahedron containing every Pauli channel compatible with
/// some measurement of sharpness `s`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompatibilityPolytope<T> {
    s: T,
    cap: T,
}

impl<T: Real> CompatibilityPolytope<T> {
    pub fn new(s: T) -> Result<Self> {
        if !(s >= T::zero() && s <= T::one()) {
            return Err(Error::InvalidSharpness(s.as_f64()));
        }
        Ok(Self {
            s,
            cap: (T::one() + (T::one() - s * s).sqrt_clamped()) * T::half(),
        })
    }

    pub fn sharpness(&self) -> T {
        self.s
    }

    /// Largest weight any member can put on a single Pauli.
    pub fn cap(&self) -> T {
        self.cap
    }

    /// `cap·e_i + (1 − cap)·e_j` for ordered pairs `i ≠ j`, `i` major.
    pub fn vertices(&self) -> Vec<PauliProbabilities<T>> {
        let mut out = Vec::with_capacity(12);
        for i in 0..4 {
            for j in (0..4).filter(|&j| j != i) {
                let mut p = [T::zero(); 4];
                p[i] = self.cap;
                p[j] = T::one() - self.cap;
                out.push(PauliProbabilities::clamped(p));
            }
        }
        out
    }

    /// Index pairs into [`vertices`](Self::vertices): the six truncated
    /// tetrahedron edges `v_ij–v_ji` and the twelve triangle edges `v_ij–v_ik`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let index = |i: usize, j: usize| 3 * i + if j < i { j } else { j - 1 };
        let mut out = Vec::with_capacity(18);
        for i in 0..4 {
            for j in i + 1..4 {
                out.push((index(i, j), index(j, i)));
            }
        }
        for i in 0..4 {
            let others: Vec<usize> = (0..4).filter(|&j| j != i).collect();
            for a in 0..3 {
                for b in a + 1..3 {
                    out.push((index(i, others[a]), index(i, others[b])));
                }
            }
        }
        out
    }

    /// Halfspace form: `p_i ≤ cap` for every `i`.
    pub fn contains(&self, p: &PauliProbabilities<T>) -> bool {
        p.max() <= self.cap + tol::<T>().exact
    }

    /// Euclidean distance from `p` to the nearest edge.
    pub fn distance_to_edges(&self, p: &PauliProbabilities<T>) -> T {
        let v = self.vertices();
        let x = p.probs();
        self.edges()
            .into_iter()
            .map(|(a, b)| segment_distance(&x, &v[a].probs(), &v[b].probs()))
            .fold(T::infinity(), T::min)
    }
}

pub(crate) fn segment_distance<T: Real>(x: &[T; 4], a: &[T; 4], b: &[T; 4]) -> T {
    let d: Vec<T> = (0..4).map(|k| b[k] - a[k]).collect();
    let len2: T = d.iter().map(|&v| v * v).sum();
    let t = if len2 > T::zero() {
        ((0..4).map(|k| (x[k] - a[k]) * d[k]).sum::<T>() / len2)
            .max(T::zero())
            .min(T::one())
    } else {
        T::zero()
    };
    (0..4)
        .map(|k| (x[k] - a[k] - t * d[k]).sq())
        .sum::<T>()
        .sqrt()
}

pub fn polytope_contains<T: Real>(poly: &CompatibilityPolytope<T>, p: &PauliProbabilities<T>) -> bool {
    poly.contains(p)
}

/// P-values on the truncation facet next to the identity vertex, for the
/// channel `Σ w_i q_i` with `q_i = cap·e₀ + (1 − cap)·e_i`:
/// `P_i = s√w_i + (1 − √(1 − s²))√(w_j w_k)`.
pub fn facet_p_values<T: Real>(s: T, w: [T; 3]) -> Result<PValues<T>> {
    if !(s >= T::zero() && s <= T::one()) {
        return Err(Error::InvalidSharpness(s.as_f64()));
    }
    let eps = tol::<T>().exact;
    let sum: T = w.iter().copied().sum();
    if w.iter().any(|&x| !(x >= -eps)) || (sum - T::one()).abs() > eps {
        return Err(Error::InvalidProbabilities(format!(
            "facet weights must be a probability vector, got sum {sum}"
        )));
    }
    let w = w.map(|x| x.max(T::zero()));
    let k = T::one() - (T::one() - s * s).sqrt_clamped();
    Ok(PValues::new(Vec3::new(
        s * w[0].sqrt() + k * (w[1] * w[2]).sqrt(),
        s * w[1].sqrt() + k * (w[0] * w[2]).sqrt(),
        s * w[2].sqrt() + k * (w[0] * w[1]).sqrt(),
    )))
}
