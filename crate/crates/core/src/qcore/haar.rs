//! Deterministic sampling of Haar-random pure qubit states.
//!
//! The generator is ChaCha20 (`rand_chacha::ChaCha20Rng`) seeded through
//! `SeedableRng::seed_from_u64`. ChaCha20 is a counter-based stream cipher,
//! so a `(seed, count)` pair maps to the same stream on every platform.
//! Pure states are uniform on the Bloch sphere and are drawn as three
//! standard normal deviates, normalized.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::QubitState;
use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::real::Real;

/// Seed and sample count for a Monte Carlo stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub count: usize,
}

impl SamplerConfig {
    pub fn new(seed: u64, count: usize) -> Result<Self> {
        let cfg = Self { seed, count };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidConfig("sample count must be positive".into()));
        }
        Ok(())
    }

    /// Independent sub-stream `index`: same count, seed derived by SplitMix64.
    pub fn split(&self, index: u64) -> Self {
        Self {
            seed: splitmix64(self.seed ^ splitmix64(index.wrapping_add(1))),
            count: self.count,
        }
    }

    pub fn rng(&self) -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(self.seed)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform point on the unit sphere.
pub fn haar_bloch_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-12 {
            return v.map(|x| x / n);
        }
    }
}

/// Uniform point on the probability simplex in ℝ⁴, from ordered uniform spacings.
pub fn uniform_simplex<R: Rng + ?Sized>(rng: &mut R) -> [f64; 4] {
    let mut u: [f64; 3] = [rng.random(), rng.random(), rng.random()];
    u.sort_by(|a, b| a.partial_cmp(b).unwrap());
    [u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]]
}

/// Iterator over Haar-random pure states.
pub struct HaarStream<T> {
    rng: ChaCha20Rng,
    remaining: usize,
    _scalar: std::marker::PhantomData<T>,
}

impl<T: Real> Iterator for HaarStream<T> {
    type Item = QubitState<T>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let v = haar_bloch_vector(&mut self.rng).map(T::lit);
        // renormalize in the target precision
        let v = Vec3(v);
        let v = v.scale(T::one() / v.norm());
        Some(QubitState::new(v).expect("unit vector is a valid state"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl<T: Real> ExactSizeIterator for HaarStream<T> {}

/// `config.count` Haar-random pure states, reproducible from `config.seed`.
pub fn sample_haar_pure<T: Real>(config: SamplerConfig) -> HaarStream<T> {
    HaarStream {
        rng: config.rng(),
        remaining: config.count,
        _scalar: std::marker::PhantomData,
    }
}

/// `count` near-uniform directions on the unit sphere (Fibonacci lattice).
pub fn fibonacci_sphere<T: Real>(count: usize) -> Vec<Vec3<T>> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|k| {
            let z = 1.0 - (2.0 * k as f64 + 1.0) / count as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * k as f64;
            Vec3::new(T::lit(r * phi.cos()), T::lit(r * phi.sin()), T::lit(z))
        })
        .collect()
}
