//! Pauli and unital qubit channels in Bloch form, their canonical
//! (rotation, Pauli, rotation) decomposition, the SU(2) → SO(3) map, and
//! Choi–Jamiołkowski states.

mod choi;
mod pauli_channel;
mod rotation;
mod unital;

pub use choi::{choi_state, choi_state_unital, ChoiState};
pub use pauli_channel::PauliProbabilities;
pub use rotation::{Rotation3, Unitary2};
pub use unital::{canonical_decompose, UnitalChannel};
