use serde::{Deserialize, Serialize};

use super::p_max_sorted;
use crate::channels::{ChoiState, PauliProbabilities};
use crate::error::Result;
use crate::linalg::{eigensystem_hermitian, symmetric_eigen, CMatrix, Mat3};
use crate::qcore::pauli;
use crate::real::Real;

/// `1 − P_max`.
pub fn lqu_pauli<T: Real>(p: &PauliProbabilities<T>) -> T {
    (T::one() - p_max_sorted(p)).max(T::zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LquResult<T> {
    pub lqu: T,
    /// `W_ij = Re Tr(√ρ (σ_i⊗I) √ρ (σ_j⊗I))`, symmetrized.
    pub w: Mat3<T>,
}

/// `1 − λ_max(W)` computed from the state directly.
pub fn lqu_direct<T: Real>(rho: &ChoiState<T>) -> Result<T> {
    lqu_direct_with_w(rho).map(|r| r.lqu)
}

pub fn lqu_direct_with_w<T: Real>(rho: &ChoiState<T>) -> Result<LquResult<T>> {
    let root = eigensystem_hermitian(rho.matrix())?.sqrt_psd()?;
    let id = CMatrix::identity(2);
    let locals: Vec<CMatrix<T>> = (1..=3).map(|k| pauli::<T>(k).kron(&id)).collect();
    let sandwiched: Vec<CMatrix<T>> = locals.iter().map(|a| &root * a).collect();
    let mut w = Mat3::zeros();
    for i in 0..3 {
        for j in i..3 {
            let v = (&sandwiched[i] * &sandwiched[j]).trace().re;
            w.0[i][j] = v;
            w.0[j][i] = v;
        }
    }
    let flat: Vec<T> = w.0.iter().flatten().copied().collect();
    let top = symmetric_eigen(&flat, 3).values[0];
    Ok(LquResult {
        lqu: (T::one() - top).max(T::zero()).min(T::one()),
        w,
    })
}
