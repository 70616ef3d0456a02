use serde::{Deserialize, Serialize};

use super::polytope::segment_distance;
use crate::channels::PauliProbabilities;
use crate::qcore::Direction;
use crate::real::Real;

/// Pauli channels compatible with a sharp (`s = 1`) measurement along a fixed direction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum SharpCompatibleSet<T> {
    /// Along axis `k` (0 = x): `p₀ = p_{k+1}`, the other two weights equal,
    /// `p₀ + p_other = ½`; a segment joining two opposite tetrahedron edges.
    PrincipalSegment {
        axis: usize,
        endpoints: [PauliProbabilities<T>; 2],
    },
    /// Two or more nonzero direction components: only the depolarizing center.
    CenterOnly,
}

impl<T: Real> SharpCompatibleSet<T> {
    /// Point at parameter `t ∈ [0, 1]`; the center for the degenerate case.
    pub fn point(&self, t: T) -> PauliProbabilities<T> {
        match self {
            Self::PrincipalSegment { endpoints, .. } => {
                let (a, b) = (endpoints[0].probs(), endpoints[1].probs());
                PauliProbabilities::clamped(std::array::from_fn(|k| a[k] + t * (b[k] - a[k])))
            }
            Self::CenterOnly => PauliProbabilities::depolarizing_center(),
        }
    }

    pub fn distance(&self, p: &PauliProbabilities<T>) -> T {
        let x = p.probs();
        match self {
            Self::PrincipalSegment { endpoints, .. } => {
                segment_distance(&x, &endpoints[0].probs(), &endpoints[1].probs())
            }
            Self::CenterOnly => {
                let c = T::lit(0.25);
                x.iter().map(|&v| (v - c).sq()).sum::<T>().sqrt()
            }
        }
    }

    pub fn contains(&self, p: &PauliProbabilities<T>, tol: T) -> bool {
        self.distance(p) <= tol
    }
}

pub fn sharp_direction_constraints<T: Real>(n: &Direction<T>) -> SharpCompatibleSet<T> {
    match n.principal_axis() {
        Some(axis) => {
            let k = axis + 1;
            let h = T::half();
            let mut a = [T::zero(); 4];
            a[0] = h;
            a[k] = h;
            let b = a.map(|v| h - v);
            SharpCompatibleSet::PrincipalSegment {
                axis,
                endpoints: [PauliProbabilities::clamped(a), PauliProbabilities::clamped(b)],
            }
        }
        None => SharpCompatibleSet::CenterOnly,
    }
}
