use serde::{Deserialize, Serialize};

use crate::channels::PauliProbabilities;
use crate::error::{Error, Result};
use crate::measures::{lqu_pauli, p_max_sorted, quantumness_pauli};
use crate::real::{tol, Real};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FidelityBoundCheck<T> {
    /// `(2p_m − 1)² + P_max²`.
    pub lhs: T,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SharpnessBoundCheck<T> {
    /// `1 − Q − P_max²`, never negative beyond round-off.
    pub q_slack: T,
    /// `|L + P_max − 1|`.
    pub lqu_residual: T,
}

/// `(2p_m − 1)² + P_max²` without the `p_m ≥ ½` precondition.
pub fn fidelity_bound_lhs<T: Real>(p: &PauliProbabilities<T>) -> T {
    (T::two() * p.max() - T::one()).sq() + p_max_sorted(p).sq()
}

/// Corrected-fidelity/sharpness bound for one channel, valid when the largest
/// weight is at least ½.
pub fn fidelity_bound_check<T: Real>(p: &PauliProbabilities<T>) -> Result<FidelityBoundCheck<T>> {
    let pm = p.max();
    if pm < T::half() - tol::<T>().exact {
        return Err(Error::BelowHalf { p_max: pm.as_f64() });
    }
    let lhs = fidelity_bound_lhs(p);
    Ok(FidelityBoundCheck {
        lhs,
        holds: lhs <= T::one() + tol::<T>().exact,
    })
}

pub fn sharpness_bound_check<T: Real>(p: &PauliProbabilities<T>) -> SharpnessBoundCheck<T> {
    let pmax = p_max_sorted(p);
    SharpnessBoundCheck {
        q_slack: T::one() - quantumness_pauli(p) - pmax.sq(),
        lqu_residual: (lqu_pauli(p) + pmax - T::one()).abs(),
    }
}

/// `(½ − x, ½ − x, x, x)`: largest weight below ½ yet `P_max = 1`, so the
/// single-channel bound fails without its hypothesis.
pub fn counterexample_pm_below_half<T: Real>(x: T) -> Result<PauliProbabilities<T>> {
    if !(x >= T::zero() && x <= T::lit(0.25)) {
        return Err(Error::InvalidConfig(format!("x must lie in [0, 1/4], got {x}")));
    }
    PauliProbabilities::new([T::half() - x, T::half() - x, x, x])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: [f64; 4]) -> PauliProbabilities<f64> {
        PauliProbabilities::new(p).unwrap()
    }

    #[test]
    fn fidelity_bound_examples() {
        let c = fidelity_bound_check(&pp([1.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(c.holds && (c.lhs - 1.0).abs() < 1e-15);
        let c = fidelity_bound_check(&pp([0.7, 0.3, 0.0, 0.0])).unwrap();
        assert!(c.holds && (c.lhs - 1.0).abs() < 1e-12);
        let c = fidelity_bound_check(&pp([0.6, 0.2, 0.1, 0.1])).unwrap();
        assert!(c.holds && c.lhs < 1.0);
        assert!(matches!(
            fidelity_bound_check(&pp([0.4, 0.4, 0.1, 0.1])),
            Err(Error::BelowHalf { .. })
        ));
    }

    #[test]
    fn sharpness_bound_examples() {
        let c = sharpness_bound_check(&pp([0.25; 4]));
        assert!(c.q_slack.abs() < 1e-15 && c.lqu_residual < 1e-15);
        let c = sharpness_bound_check(&pp([1.0, 0.0, 0.0, 0.0]));
        assert!(c.q_slack.abs() < 1e-15 && c.lqu_residual < 1e-15);
        let c = sharpness_bound_check(&pp([0.4, 0.3, 0.2, 0.1]));
        assert!((c.q_slack - 0.028081).abs() < 1e-6);
        assert!(c.lqu_residual <= 1e-12);
    }

    #[test]
    fn counterexample() {
        let p = counterexample_pm_below_half(0.1f64).unwrap();
        assert_eq!(p.probs(), [0.4, 0.4, 0.1, 0.1]);
        assert!((p_max_sorted(&p) - 1.0).abs() < 1e-12);
        assert!((fidelity_bound_lhs(&p) - 1.04).abs() < 1e-12);
        let p = counterexample_pm_below_half(0.0).unwrap();
        assert_eq!(p.probs(), [0.5, 0.5, 0.0, 0.0]);
        assert_eq!(p_max_sorted(&p), 1.0);
        let p = counterexample_pm_below_half(0.25f64).unwrap();
        assert!((p_max_sorted(&p) - 1.0).abs() < 1e-15);
        assert!(counterexample_pm_below_half(0.3).is_err());
    }
}
