//! Channel figures of merit: input-output fidelity, quantumness and local
//! quantum uncertainty, each in closed form and through a numerical oracle.

mod fidelity;
mod lqu;
mod pvalues;
mod quantumness;
mod report;

pub use fidelity::{
    avg_fidelity_mc, avg_fidelity_pauli, avg_fidelity_unital, corrected_fidelity_pauli, McEstimate,
};
pub use lqu::{lqu_direct, lqu_direct_with_w, lqu_pauli, LquResult};
pub use pvalues::{p_max_sorted, p_values, t_values, PValues};
pub use quantumness::{
    l1_coherence, quantumness_numerical, quantumness_pauli, QUANTUMNESS_NORMALIZATION,
};
pub use report::MeasureReport;

use crate::qcore::{sample_haar_pure, QubitState, SamplerConfig};
use crate::real::Real;

const CHUNK: usize = 8192;

/// Haar pure states in fixed-size sub-seeded chunks; fold order is fixed so the
/// result does not depend on how the chunks would be scheduled.
pub(crate) fn fold_haar<T: Real, A>(
    config: &SamplerConfig,
    init: A,
    mut f: impl FnMut(A, &QubitState<T>) -> A,
) -> A {
    let mut acc = init;
    let mut remaining = config.count;
    let mut index = 0u64;
    while remaining > 0 {
        let n = remaining.min(CHUNK);
        let sub = SamplerConfig {
            count: n,
            ..config.split(index)
        };
        for st in sample_haar_pure::<T>(sub) {
            acc = f(acc, &st);
        }
        remaining -= n;
        index += 1;
    }
    acc
}
