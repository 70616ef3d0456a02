use crate::real::Real;

/// Best average fidelity of a unital channel compatible with sharpness `s`:
/// `⅓(2 + √(1 − s²))`.
pub fn best_fidelity_unital_closed<T: Real>(s: T) -> T {
    (T::two() + (T::one() - s * s).sqrt_clamped()) / T::lit(3.0)
}

/// `1 − s²`.
pub fn best_quantumness_unital_closed<T: Real>(s: T) -> T {
    (T::one() - s * s).max(T::zero())
}

/// `1 − s`.
pub fn best_lqu_unital_closed<T: Real>(s: T) -> T {
    (T::one() - s).max(T::zero())
}
