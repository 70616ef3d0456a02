use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::pauli_combination;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Vec3};
use crate::real::{tol, Real};

/// Qubit state in Bloch form, `ρ = ½(I + r·σ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QubitState<T> {
    bloch: Vec3<T>,
}

impl<T: Real> QubitState<T> {
    pub fn new(bloch: Vec3<T>) -> Result<Self> {
        let n = bloch.norm();
        if !(n <= T::one() + tol::<T>().exact) {
            return Err(Error::InvalidState(n.as_f64()));
        }
        Ok(Self { bloch })
    }

    pub fn maximally_mixed() -> Self {
        Self { bloch: Vec3::zero() }
    }

    pub fn bloch(&self) -> Vec3<T> {
        self.bloch
    }

    pub fn to_matrix(&self) -> CMatrix<T> {
        let h = T::half();
        let c = |x: T| Complex::new(x * h, T::zero());
        pauli_combination(c(T::one()), self.bloch.0.map(c))
    }

    /// Builds the state carried by a density matrix.
    pub fn from_matrix(rho: &CMatrix<T>) -> Result<Self> {
        rho.require_dim(2)?;
        Self::new(super::bloch_of_operator(rho))
    }
}

/// Unit vector in ℝ³.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Direction<T> {
    n: Vec3<T>,
}

impl<T: Real> Direction<T> {
    /// Normalizes `v` when its norm is within the normalization tolerance of 1;
    /// rejects anything farther.
    pub fn new(v: Vec3<T>) -> Result<Self> {
        let norm = v.norm();
        let t = tol::<T>().normalize;
        if !((norm - T::one()).abs() <= t) {
            return Err(Error::InvalidDirection {
                norm: norm.as_f64(),
                tolerance: t.as_f64(),
            });
        }
        Ok(Self {
            n: v.scale(T::one() / norm),
        })
    }

    /// Normalizes any nonzero vector.
    pub fn from_unnormalized(v: Vec3<T>) -> Result<Self> {
        let norm = v.norm();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::InvalidDirection {
                norm: norm.as_f64(),
                tolerance: tol::<T>().normalize.as_f64(),
            });
        }
        Self::new(v.scale(T::one() / norm))
    }

    /// Principal axis `k` in 0..3 (x, y, z).
    pub fn axis(k: usize) -> Self {
        Self { n: Vec3::unit(k) }
    }

    pub fn x() -> Self {
        Self::axis(0)
    }

    pub fn y() -> Self {
        Self::axis(1)
    }

    pub fn z() -> Self {
        Self::axis(2)
    }

    pub fn vec(&self) -> Vec3<T> {
        self.n
    }

    /// Index of the principal axis `n` lies along, if any: exactly one
    /// component is above the vanishing threshold.
    pub fn principal_axis(&self) -> Option<usize> {
        let eps = tol::<T>().exact;
        let nonzero: Vec<usize> = (0..3).filter(|&i| self.n[i].abs() > eps).collect();
        match nonzero.as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }
}
