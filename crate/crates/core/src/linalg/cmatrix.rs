use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;

/// Dense square complex matrix, row-major.
///
/// Only tiny dimensions appear in this crate (qubits and qubit pairs), so
/// storage is a plain `Vec` and every product is the naive triple loop.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from row slices; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[&[Complex<T>]]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::Dimension {
                expected: dim,
                got: bad.len(),
            });
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    pub fn from_real(dim: usize, entries: &[T]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Self::from_fn(dim, |i, j| {
            Complex::new(entries[i * dim + j], T::zero())
        }))
    }

    pub fn diag_real(values: &[T]) -> Self {
        let n = values.len();
        Self::from_fn(n, |i, j| {
            if i == j {
                Complex::new(values[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * k).collect(),
        }
    }

    pub fn scale_real(&self, k: T) -> Self {
        self.scale(Complex::new(k, T::zero()))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n * m, |i, j| self[(i / m, j / m)] * other[(i % m, j % m)])
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }

    /// `max |A_ij − conj(A_ji)|`.
    pub fn hermitian_deviation(&self) -> T {
        let mut dev = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Sum of absolute values of all entries.
    pub fn entrywise_l1(&self) -> T {
        self.data.iter().map(|z| z.norm()).sum()
    }

    /// Partial trace over the first tensor factor of a 2⊗2 operator.
    pub fn partial_trace_first(&self) -> Result<Self> {
        self.require_dim(4)?;
        Ok(Self::from_fn(2, |i, j| self[(i, j)] + self[(2 + i, 2 + j)]))
    }

    /// Partial trace over the second tensor factor of a 2⊗2 operator.
    pub fn partial_trace_second(&self) -> Result<Self> {
        self.require_dim(4)?;
        Ok(Self::from_fn(2, |i, j| {
            self[(2 * i, 2 * j)] + self[(2 * i + 1, 2 * j + 1)]
        }))
    }

    pub(crate) fn require_dim(&self, dim: usize) -> Result<()> {
        if self.dim != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: self.dim,
            });
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, o: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, o.dim, "dimension mismatch in product");
        let n = self.dim;
        CMatrix::from_fn(n, |i, j| {
            (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self[(i, k)] * o[(k, j)]
            })
        })
    }
}

impl<T: Real> Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, o: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, o.dim, "dimension mismatch in sum");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, o: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, o.dim, "dimension mismatch in difference");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}
