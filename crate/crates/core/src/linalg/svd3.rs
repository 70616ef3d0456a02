use super::{Mat3, Vec3};
use crate::real::{tol, Real};

const MAX_SWEEPS: usize = 60;

/// `A = U diag(σ) Vᵀ` with orthogonal `U`, `V` and `σ` sorted descending.
#[derive(Clone, Copy, Debug)]
pub struct Svd3<T> {
    pub u: Mat3<T>,
    pub sigma: Vec3<T>,
    pub v: Mat3<T>,
}

impl<T: Real> Svd3<T> {
    pub fn reconstruct(&self) -> Mat3<T> {
        self.u * Mat3::diag(self.sigma) * self.v.transpose()
    }
}

/// One-sided (Hestenes) Jacobi SVD of a 3×3 real matrix.
///
/// Columns of `A·V` are orthogonalized pairwise; their norms are the
/// singular values. Left vectors belonging to vanishing singular values are
/// completed to an orthonormal basis.
pub fn svd3<T: Real>(a: &Mat3<T>) -> Svd3<T> {
    let mut b = *a;
    let mut v = Mat3::<T>::identity();
    let eps = tol::<T>().jacobi;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..2 {
            for j in (i + 1)..3 {
                let bi = b.col(i);
                let bj = b.col(j);
                let alpha = bi.norm_sq();
                let beta = bj.norm_sq();
                let gamma = bi.dot(&bj);
                if gamma == T::zero() || gamma.abs() <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (T::two() * gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                b.set_col(i, bi * c - bj * s);
                b.set_col(j, bi * s + bj * c);
                let vi = v.col(i);
                let vj = v.col(j);
                v.set_col(i, vi * c - vj * s);
                v.set_col(j, vi * s + vj * c);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order = [0usize, 1, 2];
    let norms = [b.col(0).norm(), b.col(1).norm(), b.col(2).norm()];
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let tiny = T::min_positive_value().sqrt();
    let mut u_cols: Vec<Vec3<T>> = Vec::with_capacity(3);
    let mut sigma = Vec3::zero();
    let mut v_sorted = Mat3::zeros();
    for (k, &src) in order.iter().enumerate() {
        sigma[k] = norms[src];
        v_sorted.set_col(k, v.col(src));
        if norms[src] > tiny {
            u_cols.push(b.col(src).scale(T::one() / norms[src]));
        }
    }
    complete_basis(&mut u_cols);
    Svd3 {
        u: Mat3::from_cols([u_cols[0], u_cols[1], u_cols[2]]),
        sigma,
        v: v_sorted,
    }
}

/// Extends up to three orthonormal vectors to an orthonormal basis of ℝ³.
fn complete_basis<T: Real>(cols: &mut Vec<Vec3<T>>) {
    if cols.is_empty() {
        cols.push(Vec3::unit(0));
    }
    if cols.len() == 1 {
        let u = cols[0];
        // standard axis least aligned with u
        let k = (0..3)
            .min_by(|&i, &j| u[i].abs().partial_cmp(&u[j].abs()).unwrap())
            .unwrap();
        let e = Vec3::unit(k);
        let w = e - u.scale(u.dot(&e));
        cols.push(w.scale(T::one() / w.norm()));
    }
    if cols.len() == 2 {
        let w = cols[0].cross(&cols[1]);
        cols.push(w);
    }
}
