//! Basic qubit objects: Pauli matrices, states, directions, unbiased binary
//! measurements with their unsharpness measures, and Haar sampling.

mod haar;
mod measurement;
mod pauli;
mod state;

pub use haar::{
    fibonacci_sphere, haar_bloch_vector, sample_haar_pure, uniform_simplex, HaarStream,
    SamplerConfig,
};
pub use measurement::{
    unsharpness_luders, unsharpness_uncertainty, BinaryMeasurement, GeneralPovm,
};
pub use pauli::{bloch_of_operator, pauli, pauli_combination};
pub use state::{Direction, QubitState};
