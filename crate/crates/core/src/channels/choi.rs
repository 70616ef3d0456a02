use num_complex::Complex;

use super::{PauliProbabilities, UnitalChannel};
use crate::error::{Error, Result};
use crate::linalg::{eigensystem_hermitian, CMatrix};
use crate::real::{tol, Real};

/// Normalized Choi state `(E ⊗ I)|ψ⁺⟩⟨ψ⁺|`, channel acting on the first qubit.
#[derive(Clone, Debug, PartialEq)]
pub struct ChoiState<T> {
    matrix: CMatrix<T>,
}

impl<T: Real> ChoiState<T> {
    /// Accepts any two-qubit density matrix.
    pub fn new(matrix: CMatrix<T>) -> Result<Self> {
        matrix.require_dim(4)?;
        let dev = matrix.hermitian_deviation();
        if dev > tol::<T>().exact {
            return Err(Error::NotHermitian(dev.as_f64()));
        }
        let tr = matrix.trace();
        if (tr.re - T::one()).abs() > tol::<T>().exact || tr.im.abs() > tol::<T>().exact {
            return Err(Error::InvalidState(tr.re.as_f64()));
        }
        let min = eigensystem_hermitian(&matrix)?.min_value();
        if min < -tol::<T>().exact {
            return Err(Error::NotPositive(min.as_f64()));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }
}

/// Closed form for a Pauli channel: an X-shaped matrix in the computational basis.
pub fn choi_state<T: Real>(p: &PauliProbabilities<T>) -> ChoiState<T> {
    let [p0, p1, p2, p3] = p.probs();
    let h = T::half();
    let r = |x: T| Complex::new(h * x, T::zero());
    let mut m = CMatrix::zeros(4);
    m[(0, 0)] = r(p0 + p3);
    m[(3, 3)] = r(p0 + p3);
    m[(0, 3)] = r(p0 - p3);
    m[(3, 0)] = r(p0 - p3);
    m[(1, 1)] = r(p1 + p2);
    m[(2, 2)] = r(p1 + p2);
    m[(1, 2)] = r(p1 - p2);
    m[(2, 1)] = r(p1 - p2);
    ChoiState { matrix: m }
}

/// `½ Σ_ij E(|i⟩⟨j|) ⊗ |i⟩⟨j|`.
pub fn choi_state_unital<T: Real>(c: &UnitalChannel<T>) -> ChoiState<T> {
    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = CMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            let unit = CMatrix::from_fn(2, |a, b| if a == i && b == j { one } else { zero });
            out = &out + &c.apply_operator(&unit).kron(&unit);
        }
    }
    ChoiState {
        matrix: out.scale_real(T::half()),
    }
}
