use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Mat3, Vec3};
use crate::qcore::{pauli, pauli_combination};
use crate::real::{tol, Real};

/// Proper rotation of ℝ³.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rotation3<T> {
    m: Mat3<T>,
}

impl<T: Real> Rotation3<T> {
    pub fn new(m: Mat3<T>) -> Result<Self> {
        let residual = m.orthogonality_residual();
        let det = m.det();
        let t = tol::<T>().reconstruct;
        if !(residual <= t) || !((det - T::one()).abs() <= t) {
            return Err(Error::NotRotation {
                residual: residual.as_f64(),
                det: det.as_f64(),
            });
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self {
            m: Mat3::identity(),
        }
    }

    /// Right-handed rotation by `angle` about `axis` (Rodrigues).
    pub fn from_axis_angle(axis: Vec3<T>, angle: T) -> Result<Self> {
        let n = axis.norm();
        if !(n > T::zero()) {
            return Err(Error::InvalidDirection {
                norm: 0.0,
                tolerance: tol::<T>().normalize.as_f64(),
            });
        }
        let k = axis.scale(T::one() / n);
        let (s, c) = angle.sin_cos();
        let kx = Mat3([
            [T::zero(), -k[2], k[1]],
            [k[2], T::zero(), -k[0]],
            [-k[1], k[0], T::zero()],
        ]);
        let kk = Mat3::from_fn(|i, j| k[i] * k[j]);
        let m = Mat3::identity().scale(c) + kx.scale(s) + kk.scale(T::one() - c);
        Ok(Self { m })
    }

    /// Haar-random rotation from a uniformly distributed unit quaternion.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
            let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-12 {
                let q = q.map(|x| T::lit(x / n));
                return Self::from_quaternion(q);
            }
        }
    }

    /// Rotation of the unit quaternion `(w, x, y, z)`.
    pub fn from_quaternion([w, x, y, z]: [T; 4]) -> Self {
        let two = T::two();
        let one = T::one();
        Self {
            m: Mat3([
                [one - two * (y * y + z * z), two * (x * y - w * z), two * (x * z + w * y)],
                [two * (x * y + w * z), one - two * (x * x + z * z), two * (y * z - w * x)],
                [two * (x * z - w * y), two * (y * z + w * x), one - two * (x * x + y * y)],
            ]),
        }
    }

    /// Unit quaternion `(w, x, y, z)` with `w ≥ 0` (Shepperd's method).
    pub fn to_quaternion(&self) -> [T; 4] {
        let r = &self.m.0;
        let quarter = T::lit(0.25);
        let tr = r[0][0] + r[1][1] + r[2][2];
        let q = if tr >= r[0][0] && tr >= r[1][1] && tr >= r[2][2] {
            let w = (T::one() + tr).sqrt_clamped() * T::half();
            let f = quarter / w;
            [w, (r[2][1] - r[1][2]) * f, (r[0][2] - r[2][0]) * f, (r[1][0] - r[0][1]) * f]
        } else if r[0][0] >= r[1][1] && r[0][0] >= r[2][2] {
            let x = (T::one() + r[0][0] - r[1][1] - r[2][2]).sqrt_clamped() * T::half();
            let f = quarter / x;
            [(r[2][1] - r[1][2]) * f, x, (r[0][1] + r[1][0]) * f, (r[0][2] + r[2][0]) * f]
        } else if r[1][1] >= r[2][2] {
            let y = (T::one() - r[0][0] + r[1][1] - r[2][2]).sqrt_clamped() * T::half();
            let f = quarter / y;
            [(r[0][2] - r[2][0]) * f, (r[0][1] + r[1][0]) * f, y, (r[1][2] + r[2][1]) * f]
        } else {
            let z = (T::one() - r[0][0] - r[1][1] + r[2][2]).sqrt_clamped() * T::half();
            let f = quarter / z;
            [(r[1][0] - r[0][1]) * f, (r[0][2] + r[2][0]) * f, (r[1][2] + r[2][1]) * f, z]
        };
        let n = q.iter().map(|&v| v * v).sum::<T>().sqrt();
        let sign = if q[0] < T::zero() { -T::one() } else { T::one() };
        q.map(|v| v * sign / n)
    }

    pub fn matrix(&self) -> Mat3<T> {
        self.m
    }

    pub fn apply(&self, v: &Vec3<T>) -> Vec3<T> {
        self.m.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { m: self.m * other.m }
    }

    pub fn inverse(&self) -> Self {
        Self {
            m: self.m.transpose(),
        }
    }

    /// Adjoint action of an SU(2) element, `R_ij = ½ Tr(σ_i V σ_j V†)`.
    pub fn from_unitary(v: &Unitary2<T>) -> Self {
        let u = v.matrix();
        let ud = u.adjoint();
        let sig: [CMatrix<T>; 3] = [pauli(1), pauli(2), pauli(3)];
        let conj: Vec<CMatrix<T>> = sig.iter().map(|s| &(u * s) * &ud).collect();
        Self {
            m: Mat3::from_fn(|i, j| (&sig[i] * &conj[j]).trace().re * T::half()),
        }
    }
}

/// 2×2 unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary2<T> {
    m: CMatrix<T>,
}

impl<T: Real> Unitary2<T> {
    pub fn new(m: CMatrix<T>) -> Result<Self> {
        m.require_dim(2)?;
        let res = (&m.adjoint() * &m).max_abs_diff(&CMatrix::identity(2));
        if !(res <= tol::<T>().reconstruct) {
            return Err(Error::NotUnitary(res.as_f64()));
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self {
            m: CMatrix::identity(2),
        }
    }

    /// `exp(−i θ n̂·σ / 2)`.
    pub fn from_axis_angle(axis: Vec3<T>, angle: T) -> Result<Self> {
        let n = axis.norm();
        if !(n > T::zero()) {
            return Err(Error::InvalidDirection {
                norm: 0.0,
                tolerance: tol::<T>().normalize.as_f64(),
            });
        }
        let (s, c) = (angle * T::half()).sin_cos();
        let k = axis.scale(s / n);
        Ok(Self {
            m: pauli_combination(
                Complex::new(c, T::zero()),
                k.0.map(|x| Complex::new(T::zero(), -x)),
            ),
        })
    }

    /// A unitary inducing `r`, with the phase fixed so that the first entry
    /// (row-major) of non-negligible modulus is real and positive.
    pub fn from_rotation(r: &Rotation3<T>) -> Self {
        let [w, x, y, z] = r.to_quaternion();
        let m = pauli_combination(
            Complex::new(w, T::zero()),
            [x, y, z].map(|v| Complex::new(T::zero(), -v)),
        );
        let eps = tol::<T>().reconstruct;
        let lead = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .into_iter()
            .map(|ij| m[ij])
            .find(|z| z.norm() > eps)
            .expect("unitary has a nonzero entry");
        let phase = lead.conj() / Complex::new(lead.norm(), T::zero());
        Self { m: m.scale(phase) }
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.m
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            m: &self.m * &other.m,
        }
    }

    pub fn with_phase(&self, phi: T) -> Self {
        Self {
            m: self.m.scale(Complex::new(phi.cos(), phi.sin())),
        }
    }
}
