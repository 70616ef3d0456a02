use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{pauli_combination, Direction, QubitState};
use crate::error::{Error, Result};
use crate::linalg::{eigensystem_hermitian, CMatrix, Vec3};
use crate::real::{tol, Real};

/// Unbiased two-outcome qubit POVM `M± = ½(I ± s n̂·σ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinaryMeasurement<T> {
    s: T,
    direction: Direction<T>,
}

impl<T: Real> BinaryMeasurement<T> {
    /// `s` must lie in `[0, 1]`; values within round-off of the ends are clamped.
    pub fn new(s: T, direction: Direction<T>) -> Result<Self> {
        let eps = tol::<T>().exact;
        if !(s >= -eps && s <= T::one() + eps) {
            return Err(Error::InvalidSharpness(s.as_f64()));
        }
        Ok(Self {
            s: s.max(T::zero()).min(T::one()),
            direction,
        })
    }

    pub fn sharpness(&self) -> T {
        self.s
    }

    pub fn direction(&self) -> Direction<T> {
        self.direction
    }

    /// The point `s·n̂` inside the Bloch ball.
    pub fn bloch_point(&self) -> Vec3<T> {
        self.direction.vec().scale(self.s)
    }

    /// Same sharpness, different direction.
    pub fn with_direction(&self, direction: Direction<T>) -> Self {
        Self { s: self.s, direction }
    }

    /// `(M₊, M₋)`.
    pub fn effects(&self) -> (CMatrix<T>, CMatrix<T>) {
        let h = Complex::new(T::half(), T::zero());
        let a = self.bloch_point().0.map(|x| Complex::new(x * T::half(), T::zero()));
        let plus = pauli_combination(h, a);
        let minus = pauli_combination(h, a.map(|z| -z));
        (plus, minus)
    }

    /// Outcome probabilities `½(1 ± s n̂·r)`.
    pub fn probabilities(&self, state: &QubitState<T>) -> (T, T) {
        let x = self.s * self.direction.vec().dot(&state.bloch());
        ((T::one() + x) * T::half(), (T::one() - x) * T::half())
    }

    pub fn to_povm(&self) -> GeneralPovm<T> {
        let (p, m) = self.effects();
        GeneralPovm {
            effects: vec![p, m],
            dim: 2,
        }
    }
}

/// Finite POVM on a Hilbert space of dimension at most 4.
#[derive(Clone, Debug)]
pub struct GeneralPovm<T> {
    effects: Vec<CMatrix<T>>,
    dim: usize,
}

impl<T: Real> GeneralPovm<T> {
    pub fn new(effects: Vec<CMatrix<T>>) -> Result<Self> {
        let first = effects
            .first()
            .ok_or_else(|| Error::InvalidPovm("no effects".into()))?;
        let dim = first.dim();
        if dim == 0 || dim > 4 {
            return Err(Error::InvalidPovm(format!("dimension {dim} not in 1..=4")));
        }
        let eps = tol::<T>().exact;
        let mut sum = CMatrix::zeros(dim);
        for (i, m) in effects.iter().enumerate() {
            if m.dim() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: m.dim(),
                });
            }
            let eig = eigensystem_hermitian(m)
                .map_err(|e| Error::InvalidPovm(format!("effect {i}: {e}")))?;
            if eig.min_value() < -eps {
                return Err(Error::InvalidPovm(format!(
                    "effect {i} has eigenvalue {:e}",
                    eig.min_value().as_f64()
                )));
            }
            sum = &sum + m;
        }
        let dev = sum.max_abs_diff(&CMatrix::identity(dim));
        if dev > eps {
            return Err(Error::InvalidPovm(format!(
                "effects sum to identity only within {:e}",
                dev.as_f64()
            )));
        }
        Ok(Self { effects, dim })
    }

    pub fn effects(&self) -> &[CMatrix<T>] {
        &self.effects
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn outcome_probabilities(&self, rho: &CMatrix<T>) -> Vec<T> {
        self.effects.iter().map(|m| (m * rho).trace().re).collect()
    }
}

/// Uncertainty-based unsharpness `Σ_ij |r_ij|`, with
/// `r_ij = (δ_ij Tr M_i − Tr M_i M_j) / d`.
pub fn unsharpness_uncertainty<T: Real>(povm: &GeneralPovm<T>) -> T {
    let d = T::from(povm.dim).unwrap();
    let effects = povm.effects();
    let mut total = T::zero();
    for (i, mi) in effects.iter().enumerate() {
        for (j, mj) in effects.iter().enumerate() {
            let mut r = -(mi * mj).trace().re;
            if i == j {
                r += mi.trace().re;
            }
            total += (r / d).abs();
        }
    }
    total
}

/// Lüders-instrument unsharpness `‖I − Σ_i M_i²‖` (operator norm).
pub fn unsharpness_luders<T: Real>(povm: &GeneralPovm<T>) -> T {
    let mut x = CMatrix::identity(povm.dim());
    for m in povm.effects() {
        x = &x - &(m * m);
    }
    // symmetrize away round-off before the Hermitian solver sees it
    let x = (&x + &x.adjoint()).scale_real(T::half());
    let e = eigensystem_hermitian(&x).expect("symmetrized operator is Hermitian");
    e.max_value().abs().max(e.min_value().abs())
}
