use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Vec3};
use crate::qcore::{pauli, QubitState};
use crate::real::{tol, Real};

/// Probability vector `(p₀, p₁, p₂, p₃)` of the Pauli channel
/// `ρ ↦ Σ_j p_j σ_j ρ σ_j`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PauliProbabilities<T> {
    p: [T; 4],
}

impl<T: Real> PauliProbabilities<T> {
    /// Entries may undershoot zero by the exact-arithmetic tolerance (they are
    /// clamped); the sum must be 1 within the same tolerance.
    pub fn new(p: [T; 4]) -> Result<Self> {
        let eps = tol::<T>().exact;
        if let Some((i, &v)) = p.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidProbabilities(format!("p{i} = {v} is not finite")));
        }
        if let Some((i, &v)) = p.iter().enumerate().find(|(_, &v)| v < -eps) {
            return Err(Error::InvalidProbabilities(format!("p{i} = {v} is negative")));
        }
        let sum: T = p.iter().copied().sum();
        if (sum - T::one()).abs() > eps {
            return Err(Error::InvalidProbabilities(format!(
                "entries sum to {sum}, not 1"
            )));
        }
        Ok(Self::clamped(p))
    }

    pub(crate) fn clamped(p: [T; 4]) -> Self {
        Self {
            p: p.map(|x| x.max(T::zero())),
        }
    }

    pub fn identity() -> Self {
        Self::vertex(0)
    }

    /// The unitary channel `ρ ↦ σ_k ρ σ_k`.
    pub fn vertex(k: usize) -> Self {
        let mut p = [T::zero(); 4];
        p[k] = T::one();
        Self { p }
    }

    /// Maximally depolarizing channel at the center of the tetrahedron.
    pub fn depolarizing_center() -> Self {
        Self {
            p: [T::lit(0.25); 4],
        }
    }

    /// Inverts `λ₁ = p₀+p₁−p₂−p₃`, `λ₂ = p₀−p₁+p₂−p₃`, `λ₃ = p₀−p₁−p₂+p₃`.
    pub fn from_lambdas(l: Vec3<T>) -> Result<Self> {
        Self::new(Self::raw_from_lambdas(l))
    }

    pub(crate) fn raw_from_lambdas(l: Vec3<T>) -> [T; 4] {
        let q = T::lit(0.25);
        [
            (T::one() + l[0] + l[1] + l[2]) * q,
            (T::one() + l[0] - l[1] - l[2]) * q,
            (T::one() - l[0] + l[1] - l[2]) * q,
            (T::one() - l[0] - l[1] + l[2]) * q,
        ]
    }

    /// Diagonal of the Bloch transfer matrix.
    pub fn lambdas(&self) -> Vec3<T> {
        let [p0, p1, p2, p3] = self.p;
        Vec3::new(p0 + p1 - p2 - p3, p0 - p1 + p2 - p3, p0 - p1 - p2 + p3)
    }

    pub fn probs(&self) -> [T; 4] {
        self.p
    }

    pub fn get(&self, i: usize) -> T {
        self.p[i]
    }

    pub fn max(&self) -> T {
        self.p.iter().copied().fold(T::zero(), T::max)
    }

    /// Entries in non-increasing order; ties keep index order.
    pub fn sorted_desc(&self) -> [T; 4] {
        let mut idx = [0usize, 1, 2, 3];
        idx.sort_by(|&a, &b| match self.p[b].partial_cmp(&self.p[a]) {
            Some(Ordering::Equal) | None => a.cmp(&b),
            Some(o) => o,
        });
        idx.map(|i| self.p[i])
    }

    /// Bloch-vector action `r ↦ (λ₁ r_x, λ₂ r_y, λ₃ r_z)`.
    pub fn apply(&self, state: &QubitState<T>) -> QubitState<T> {
        let l = self.lambdas();
        let r = state.bloch();
        QubitState::new(Vec3::new(l[0] * r[0], l[1] * r[1], l[2] * r[2]))
            .expect("Pauli channels contract the Bloch ball")
    }

    /// Kraus-form action `Σ_j p_j σ_j X σ_j` on an arbitrary 2×2 operator.
    pub fn apply_operator(&self, x: &CMatrix<T>) -> CMatrix<T> {
        let mut out = CMatrix::zeros(2);
        for (j, &pj) in self.p.iter().enumerate() {
            let s = pauli::<T>(j);
            out = &out + &(&(&s * x) * &s).scale_real(pj);
        }
        out
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.p.map(Real::as_f64)
    }
}
