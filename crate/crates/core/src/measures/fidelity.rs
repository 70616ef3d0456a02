use serde::{Deserialize, Serialize};

use super::fold_haar;
use crate::channels::{PauliProbabilities, UnitalChannel};
use crate::error::Result;
use crate::qcore::SamplerConfig;
use crate::real::Real;

/// `⅓(1 + 2p₀)`.
pub fn avg_fidelity_pauli<T: Real>(p: &PauliProbabilities<T>) -> T {
    (T::one() + T::two() * p.get(0)) / T::lit(3.0)
}

/// `½(1 + tr T / 3)` for the Bloch matrix `T`.
pub fn avg_fidelity_unital<T: Real>(c: &UnitalChannel<T>) -> T {
    T::half() * (T::one() + c.bloch_matrix().trace() / T::lit(3.0))
}

/// Fidelity after the best unitary pre/post correction: `⅓(1 + 2 max p)`.
pub fn corrected_fidelity_pauli<T: Real>(p: &PauliProbabilities<T>) -> T {
    (T::one() + T::two() * p.max()) / T::lit(3.0)
}

/// Sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate<T> {
    pub mean: T,
    pub std_err: T,
    pub count: usize,
}

/// Haar average of `⟨ψ|E(ψ)|ψ⟩ = ½(1 + r·T r)` over pure inputs.
pub fn avg_fidelity_mc<T: Real>(c: &UnitalChannel<T>, config: SamplerConfig) -> Result<McEstimate<T>> {
    config.validate()?;
    let t = c.bloch_matrix();
    // Welford
    let (n, mean, m2) = fold_haar::<T, _>(&config, (0usize, T::zero(), T::zero()), |(n, mean, m2), st| {
        let r = st.bloch();
        let x = T::half() * (T::one() + r.dot(&t.mul_vec(&r)));
        let n = n + 1;
        let d = x - mean;
        let mean = mean + d / T::lit(n as f64);
        (n, mean, m2 + d * (x - mean))
    });
    let var = if n > 1 { m2 / T::lit((n - 1) as f64) } else { T::zero() };
    Ok(McEstimate {
        mean,
        std_err: (var / T::lit(n as f64)).sqrt(),
        count: n,
    })
}
