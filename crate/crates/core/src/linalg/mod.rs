//! Small dense linear algebra: 3-vectors, 3×3 real matrices, complex square
//! matrices up to dimension 4, Jacobi eigensolvers and a 3×3 SVD.

mod cmatrix;
mod jacobi;
mod mat3;
mod svd3;

pub use cmatrix::CMatrix;
pub use jacobi::{eigensystem_hermitian, symmetric_eigen, HermitianEigen, SymmetricEigen};
pub use mat3::{Mat3, Vec3};
pub use svd3::{svd3, Svd3};

pub use num_complex::Complex;
