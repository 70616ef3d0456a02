//! Cyclic Jacobi eigensolvers.
//!
//! Hermitian matrices are diagonalized through their real-symmetric embedding
//! `[[Re A, −Im A], [Im A, Re A]]`, whose spectrum is that of `A` with every
//! eigenvalue doubled. For the 2×2 and 4×4 operators in this crate this is
//! plenty fast and very robust.

use num_complex::Complex;

use super::CMatrix;
use crate::error::{Error, Result};
use crate::real::{tol, Real};

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymmetricEigen<T> {
    /// Eigenvalues in descending order.
    pub values: Vec<T>,
    /// Row-major `n×n`; column `k` is the eigenvector of `values[k]`.
    pub vectors: Vec<T>,
    pub dim: usize,
}

impl<T: Real> SymmetricEigen<T> {
    pub fn vector(&self, k: usize) -> Vec<T> {
        (0..self.dim).map(|i| self.vectors[i * self.dim + k]).collect()
    }
}

/// Diagonalizes the symmetric `n×n` row-major matrix `a`.
///
/// Only the upper triangle is trusted; the lower one is mirrored from it.
pub fn symmetric_eigen<T: Real>(a: &[T], n: usize) -> SymmetricEigen<T> {
    assert_eq!(a.len(), n * n, "symmetric_eigen: expected {n}x{n} entries");
    let mut m = a.to_vec();
    for i in 0..n {
        for j in 0..i {
            m[i * n + j] = m[j * n + i];
        }
    }
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }

    let scale = m.iter().map(|&x| x * x).sum::<T>().sqrt();
    let threshold = tol::<T>().jacobi * scale;

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&m, n);
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (T::two() * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].partial_cmp(&m[i * n + i]).unwrap());
    let values = order.iter().map(|&k| m[k * n + k]).collect();
    let mut vectors = vec![T::zero(); n * n];
    for (new_k, &old_k) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + new_k] = v[i * n + old_k];
        }
    }
    SymmetricEigen {
        values,
        vectors,
        dim: n,
    }
}

fn off_diagonal_norm<T: Real>(m: &[T], n: usize) -> T {
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[i * n + j] * m[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigen-decomposition `A = U diag(λ) U†` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen<T> {
    /// Eigenvalues in descending order.
    pub values: Vec<T>,
    /// Unitary whose columns are the eigenvectors.
    pub vectors: CMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    /// `U f(Λ) U†` for a real spectral function `f`.
    pub fn map_spectrum(&self, f: impl Fn(T) -> T) -> CMatrix<T> {
        let d: Vec<T> = self.values.iter().map(|&x| f(x)).collect();
        let u = &self.vectors;
        &(u * &CMatrix::diag_real(&d)) * &u.adjoint()
    }

    pub fn reconstruct(&self) -> CMatrix<T> {
        self.map_spectrum(|x| x)
    }

    pub fn min_value(&self) -> T {
        *self.values.last().expect("empty spectrum")
    }

    pub fn max_value(&self) -> T {
        self.values[0]
    }

    /// Principal square root of a PSD matrix; eigenvalues down to
    /// `−exact` are clamped to zero, anything lower is an error.
    pub fn sqrt_psd(&self) -> Result<CMatrix<T>> {
        let min = self.min_value();
        if min < -tol::<T>().exact {
            return Err(Error::NotPositive(min.as_f64()));
        }
        Ok(self.map_spectrum(Real::sqrt_clamped))
    }
}

/// Diagonalizes a Hermitian matrix; rejects inputs whose Hermitian deviation
/// exceeds the exact-arithmetic tolerance.
pub fn eigensystem_hermitian<T: Real>(a: &CMatrix<T>) -> Result<HermitianEigen<T>> {
    let dev = a.hermitian_deviation();
    if dev > tol::<T>().exact {
        return Err(Error::NotHermitian(dev.as_f64()));
    }
    let n = a.dim();
    let m = 2 * n;
    let mut emb = vec![T::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            emb[i * m + j] = z.re;
            emb[i * m + n + j] = -z.im;
            emb[(n + i) * m + j] = z.im;
            emb[(n + i) * m + n + j] = z.re;
        }
    }
    let real = symmetric_eigen(&emb, m);

    // Each complex eigenvector v shows up twice, as (Re v, Im v) and as the
    // embedding of i·v. Pick n of the 2n real vectors by pivoted complex
    // Gram-Schmidt: vectors from distinct eigenspaces are already orthogonal,
    // so the pivoting only has to resolve the doubled copies.
    let mut candidates: Vec<Vec<Complex<T>>> = (0..m)
        .map(|k| {
            let col = real.vector(k);
            (0..n).map(|i| Complex::new(col[i], col[n + i])).collect()
        })
        .collect();
    let mut chosen: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, T, Vec<Complex<T>>)> = None;
        for (idx, cand) in candidates.iter().enumerate() {
            let mut r = cand.clone();
            for _ in 0..2 {
                for q in &chosen {
                    let proj = inner(q, &r);
                    for (ri, qi) in r.iter_mut().zip(q) {
                        *ri -= proj * qi;
                    }
                }
            }
            let norm = r.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
            if best.as_ref().is_none_or(|(_, b, _)| norm > *b) {
                best = Some((idx, norm, r));
            }
        }
        let (idx, norm, r) = best.expect("no candidates left");
        candidates.remove(idx);
        chosen.push(r.into_iter().map(|z| z / Complex::new(norm, T::zero())).collect());
    }

    // Rayleigh quotients give the eigenvalue attached to each chosen vector.
    let mut pairs: Vec<(T, Vec<Complex<T>>)> = chosen
        .into_iter()
        .map(|v| {
            let av: Vec<Complex<T>> = (0..n)
                .map(|i| (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + a[(i, j)] * v[j]))
                .collect();
            (inner(&v, &av).re, v)
        })
        .collect();
    pairs.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());

    let values = pairs.iter().map(|p| p.0).collect();
    let vectors = CMatrix::from_fn(n, |i, k| pairs[k].1[i]);
    Ok(HermitianEigen { values, vectors })
}

/// `⟨a, b⟩ = Σ conj(a_i) b_i`.
fn inner<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    a.iter()
        .zip(b)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (x, y)| acc + x.conj() * y)
}
