use serde::{Deserialize, Serialize};

use crate::channels::PauliProbabilities;
use crate::linalg::Vec3;
use crate::real::Real;

/// `(P₁, P₂, P₃)`: semiaxes of the compatible-measurement ellipsoid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PValues<T> {
    pub values: Vec3<T>,
}

impl<T: Real> PValues<T> {
    pub fn new(values: Vec3<T>) -> Self {
        Self { values }
    }

    pub fn p_max(&self) -> T {
        self.values.0.iter().copied().fold(T::neg_infinity(), T::max)
    }

    /// First index attaining the maximum.
    pub fn argmax(&self) -> usize {
        let m = self.p_max();
        self.values.0.iter().position(|&v| v == m).unwrap_or(0)
    }

    pub fn get(&self, i: usize) -> T {
        self.values[i]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.values.to_f64()
    }
}

/// `P_i = 2(√(p₀ p_i) + √(p_j p_k))`.
pub fn p_values<T: Real>(p: &PauliProbabilities<T>) -> PValues<T> {
    let q = p.probs();
    let two = T::two();
    PValues::new(Vec3::new(
        two * ((q[0] * q[1]).sqrt() + (q[2] * q[3]).sqrt()),
        two * ((q[0] * q[2]).sqrt() + (q[1] * q[3]).sqrt()),
        two * ((q[0] * q[3]).sqrt() + (q[1] * q[2]).sqrt()),
    ))
}

/// Largest P-value from the sorted weights: pair the two largest and the two smallest.
pub fn p_max_sorted<T: Real>(p: &PauliProbabilities<T>) -> T {
    let d = p.sorted_desc();
    T::two() * ((d[0] * d[1]).sqrt() + (d[2] * d[3]).sqrt())
}

/// `T_i = 2(√(p₀↓p_i↓) − √(p_j↓p_k↓))` on the sorted weights.
pub fn t_values<T: Real>(p: &PauliProbabilities<T>) -> Vec3<T> {
    let d = p.sorted_desc();
    let two = T::two();
    Vec3::new(
        two * ((d[0] * d[1]).sqrt() - (d[2] * d[3]).sqrt()),
        two * ((d[0] * d[2]).sqrt() - (d[1] * d[3]).sqrt()),
        two * ((d[0] * d[3]).sqrt() - (d[1] * d[2]).sqrt()),
    )
}
