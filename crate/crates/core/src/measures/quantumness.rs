use super::fold_haar;
use crate::channels::{PauliProbabilities, UnitalChannel, Unitary2};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Mat3, Vec3};
use crate::qcore::{fibonacci_sphere, SamplerConfig};
use crate::real::Real;

/// Makes the identity map score 1: the Haar mean of squared l₁ coherence is 2/3.
pub const QUANTUMNESS_NORMALIZATION: f64 = 1.5;

/// `(p₀↓ − p₁↓)² + (p₂↓ − p₃↓)²`.
pub fn quantumness_pauli<T: Real>(p: &PauliProbabilities<T>) -> T {
    let d = p.sorted_desc();
    (d[0] - d[1]).sq() + (d[2] - d[3]).sq()
}

/// Sum of off-diagonal moduli of `ρ` in the basis given by the columns of `basis`.
pub fn l1_coherence<T: Real>(rho: &CMatrix<T>, basis: &Unitary2<T>) -> T {
    let u = basis.matrix();
    let r = &(&u.adjoint() * rho) * u;
    let n = r.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += r[(i, j)].norm();
            }
        }
    }
    s
}

/// Basis-minimized Haar average of squared l₁ coherence of the channel output.
///
/// A qubit basis is labelled by the Bloch direction `m` of its first vector;
/// the squared coherence of an output `v` is then `|v|² − (m·v)²`, so the Haar
/// average only needs the second-moment matrix `M = E[v vᵀ]` and equals
/// `tr M − mᵀ M m`. The minimum over `m` is searched on a Fibonacci lattice of
/// `basis_grid²` directions followed by one local pattern-search pass.
pub fn quantumness_numerical<T: Real>(
    c: &UnitalChannel<T>,
    config: SamplerConfig,
    basis_grid: usize,
) -> Result<T> {
    config.validate()?;
    if basis_grid < 8 {
        return Err(Error::InvalidConfig(format!(
            "basis grid must be at least 8, got {basis_grid}"
        )));
    }
    let t = c.bloch_matrix();
    let sum = fold_haar::<T, _>(&config, Mat3::zeros(), |acc, st| {
        let v = t.mul_vec(&st.bloch());
        acc + Mat3::from_fn(|i, j| v[i] * v[j])
    });
    let moment = sum.scale(T::one() / T::lit(config.count as f64));
    let trace = moment.trace();
    let objective = |m: &Vec3<T>| trace - m.dot(&moment.mul_vec(m));

    let count = basis_grid * basis_grid;
    let mut best = Vec3::unit(2);
    let mut best_val = T::infinity();
    for m in fibonacci_sphere::<T>(count) {
        let val = objective(&m);
        if val < best_val {
            best_val = val;
            best = m;
        }
    }

    let mut h = T::lit((4.0 * std::f64::consts::PI / count as f64).sqrt());
    let floor = T::lit(1e-9);
    while h > floor {
        let (e1, e2) = tangent_frame(&best);
        let mut moved = false;
        for d in [e1, -e1, e2, -e2] {
            let cand = best + d.scale(h);
            let cand = cand.scale(T::one() / cand.norm());
            let val = objective(&cand);
            if val < best_val {
                best_val = val;
                best = cand;
                moved = true;
            }
        }
        if !moved {
            h *= T::half();
        }
    }
    Ok((T::lit(QUANTUMNESS_NORMALIZATION) * best_val).max(T::zero()))
}

fn tangent_frame<T: Real>(m: &Vec3<T>) -> (Vec3<T>, Vec3<T>) {
    let k = (0..3)
        .min_by(|&a, &b| m[a].abs().partial_cmp(&m[b].abs()).unwrap())
        .unwrap_or(0);
    let e1 = m.cross(&Vec3::unit(k));
    let e1 = e1.scale(T::one() / e1.norm());
    (e1, m.cross(&e1))
}
