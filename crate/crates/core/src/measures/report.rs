use serde::{Deserialize, Serialize};

use super::{
    avg_fidelity_pauli, avg_fidelity_unital, corrected_fidelity_pauli, lqu_pauli, p_values,
    quantumness_pauli, PValues,
};
use crate::channels::{PauliProbabilities, UnitalChannel};
use crate::real::Real;

/// All closed-form figures of merit for one channel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport<T> {
    pub avg_fidelity: T,
    pub corrected_fidelity: T,
    pub quantumness: T,
    pub lqu: T,
    pub p_values: PValues<T>,
    pub p_max: T,
}

impl<T: Real> MeasureReport<T> {
    pub fn pauli(p: &PauliProbabilities<T>) -> Self {
        let pv = p_values(p);
        Self {
            avg_fidelity: avg_fidelity_pauli(p),
            corrected_fidelity: corrected_fidelity_pauli(p),
            quantumness: quantumness_pauli(p),
            lqu: lqu_pauli(p),
            p_values: pv,
            p_max: pv.p_max(),
        }
    }

    /// Rotation-invariant quantities come from the canonical Pauli part;
    /// the plain fidelity sees the rotations.
    pub fn unital(c: &UnitalChannel<T>) -> Self {
        Self {
            avg_fidelity: avg_fidelity_unital(c),
            ..Self::pauli(&c.pauli_part())
        }
    }
}
