use num_complex::Complex;

use crate::linalg::{CMatrix, Vec3};
use crate::real::Real;

/// `σ_k` for `k = 0..=3` (σ₀ = I).
pub fn pauli<T: Real>(k: usize) -> CMatrix<T> {
    let o = T::zero();
    let l = T::one();
    let z = |re: T, im: T| Complex::new(re, im);
    let rows = match k {
        0 => [[z(l, o), z(o, o)], [z(o, o), z(l, o)]],
        1 => [[z(o, o), z(l, o)], [z(l, o), z(o, o)]],
        2 => [[z(o, o), z(o, -l)], [z(o, l), z(o, o)]],
        3 => [[z(l, o), z(o, o)], [z(o, o), z(-l, o)]],
        _ => panic!("Pauli index {k} out of range"),
    };
    CMatrix::from_fn(2, |i, j| rows[i][j])
}

/// `c₀ I + c·σ` with complex coefficients.
pub fn pauli_combination<T: Real>(c0: Complex<T>, c: [Complex<T>; 3]) -> CMatrix<T> {
    let mut m = pauli::<T>(0).scale(c0);
    for (k, ck) in c.iter().enumerate() {
        m = &m + &pauli::<T>(k + 1).scale(*ck);
    }
    m
}

/// Real Bloch components `Tr(A σ_k)` of a Hermitian 2×2 operator.
pub fn bloch_of_operator<T: Real>(a: &CMatrix<T>) -> Vec3<T> {
    Vec3([1, 2, 3].map(|k| (a * &pauli(k)).trace().re))
}
