use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{PauliProbabilities, Rotation3};
use crate::error::{Error, Result};
use crate::linalg::{svd3, CMatrix, Mat3, Vec3};
use crate::qcore::{pauli, pauli_combination, QubitState};
use crate::real::{tol, Real};

/// Unital qubit channel `r ↦ T r`, stored with its canonical decomposition
/// `T = r_out · diag(λ(p)) · r_in`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitalChannel<T> {
    bloch: Mat3<T>,
    r_out: Rotation3<T>,
    p: PauliProbabilities<T>,
    r_in: Rotation3<T>,
}

impl<T: Real> UnitalChannel<T> {
    /// `E = V₂ ∘ E_p ∘ V₁` with `R_{V₂} = r_out` and `R_{V₁} = r_in`.
    pub fn from_parts(r_out: Rotation3<T>, p: PauliProbabilities<T>, r_in: Rotation3<T>) -> Self {
        let bloch = r_out.matrix() * Mat3::diag(p.lambdas()) * r_in.matrix();
        Self {
            bloch,
            r_out,
            p,
            r_in,
        }
    }

    pub fn pauli(p: PauliProbabilities<T>) -> Self {
        Self::from_parts(Rotation3::identity(), p, Rotation3::identity())
    }

    pub fn identity() -> Self {
        Self::pauli(PauliProbabilities::identity())
    }

    pub fn from_bloch_matrix(t: Mat3<T>) -> Result<Self> {
        canonical_decompose(t)
    }

    pub fn bloch_matrix(&self) -> Mat3<T> {
        self.bloch
    }

    pub fn pauli_part(&self) -> PauliProbabilities<T> {
        self.p
    }

    pub fn r_out(&self) -> Rotation3<T> {
        self.r_out
    }

    pub fn r_in(&self) -> Rotation3<T> {
        self.r_in
    }

    pub fn apply(&self, state: &QubitState<T>) -> QubitState<T> {
        let out = self.bloch.mul_vec(&state.bloch());
        // contraction up to round-off
        let n = out.norm();
        let out = if n > T::one() { out.scale(T::one() / n) } else { out };
        QubitState::new(out).expect("unital channels contract the Bloch ball")
    }

    /// Action on an arbitrary 2×2 operator `c₀ I + c·σ ↦ c₀ I + (T c)·σ`.
    pub fn apply_operator(&self, x: &CMatrix<T>) -> CMatrix<T> {
        let half = Complex::new(T::half(), T::zero());
        let c0 = x.trace() * half;
        let c: [Complex<T>; 3] = [1, 2, 3].map(|k| (&pauli::<T>(k) * x).trace() * half);
        let m = &self.bloch.0;
        let tc: [Complex<T>; 3] = std::array::from_fn(|i| {
            (0..3).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                acc + c[j] * Complex::new(m[i][j], T::zero())
            })
        });
        pauli_combination(c0, tc)
    }
}

/// Canonical `(r_out, p, r_in)` factorization of a unital Bloch matrix.
///
/// Real SVD `T = O₁ Σ O₂ᵀ` with singular values sorted descending. A factor
/// with determinant −1 has its last column negated together with the last
/// singular value, so both rotations are proper and any leftover sign sits on
/// the smallest entry. Among column permutations allowed by tied singular
/// values, the one with `O₁` closest to the identity (Frobenius) is kept.
/// The Pauli vector follows from the signed singular values; entries below
/// `−cp` tolerance mean the map is not completely positive.
pub fn canonical_decompose<T: Real>(t: Mat3<T>) -> Result<UnitalChannel<T>> {
    if t.0.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::InvalidConfig("Bloch matrix has non-finite entries".into()));
    }
    let svd = svd3(&t);
    let tie = tol::<T>().reconstruct * svd.sigma[0].max(T::one());

    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    // (cost, U, λ, V)
    type Candidate<T> = (T, Mat3<T>, Vec3<T>, Mat3<T>);
    let mut best: Option<Candidate<T>> = None;
    for perm in PERMS {
        if (0..3).any(|k| (svd.sigma[perm[k]] - svd.sigma[k]).abs() > tie) {
            continue;
        }
        let mut u = Mat3::from_cols(perm.map(|k| svd.u.col(k)));
        let mut v = Mat3::from_cols(perm.map(|k| svd.v.col(k)));
        let mut lambda = Vec3(perm.map(|k| svd.sigma[k]));
        if u.det() < T::zero() {
            u.set_col(2, -u.col(2));
            lambda[2] = -lambda[2];
        }
        if v.det() < T::zero() {
            v.set_col(2, -v.col(2));
            lambda[2] = -lambda[2];
        }
        let dist = (u - Mat3::identity()).frobenius_sq();
        if best.as_ref().is_none_or(|b| dist < b.0) {
            best = Some((dist, u, lambda, v));
        }
    }
    let (_, u, lambda, v) = best.expect("identity permutation always admissible");

    let raw = PauliProbabilities::raw_from_lambdas(lambda);
    if raw.iter().any(|&x| x < -tol::<T>().cp) {
        return Err(Error::NotCompletelyPositive {
            lambda: lambda.to_f64(),
            p: raw.map(Real::as_f64),
        });
    }
    Ok(UnitalChannel {
        bloch: t,
        r_out: Rotation3::new(u)?,
        p: PauliProbabilities::clamped(raw),
        r_in: Rotation3::new(v.transpose())?,
    })
}
