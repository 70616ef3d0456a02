use serde::{Deserialize, Serialize};

use crate::channels::{PauliProbabilities, UnitalChannel};
use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::measures::{p_values, PValues};
use crate::qcore::{BinaryMeasurement, Direction};
use crate::real::{tol, Real};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompatVerdict<T> {
    pub compatible: bool,
    /// `Σ s² n_i² / P_i²`, `+∞` when a vanishing `P_i` meets a nonzero numerator.
    pub lhs: T,
    pub p_values: PValues<T>,
}

/// `Σ b_i² / P_i²` for a Bloch point `b`. A term with `P_i` below the
/// vanishing threshold contributes 0 if `b_i` vanishes too and `+∞` otherwise.
pub fn criterion_lhs<T: Real>(point: &Vec3<T>, semiaxes: &PValues<T>) -> T {
    let eps = tol::<T>().vanishing;
    let mut lhs = T::zero();
    for i in 0..3 {
        let num = point[i];
        let den = semiaxes.get(i);
        if den < eps {
            if num.abs() >= eps {
                return T::infinity();
            }
        } else {
            lhs += (num / den).sq();
        }
    }
    lhs
}

fn verdict<T: Real>(point: Vec3<T>, pv: PValues<T>) -> CompatVerdict<T> {
    let lhs = criterion_lhs(&point, &pv);
    CompatVerdict {
        compatible: lhs <= T::one() + tol::<T>().exact,
        lhs,
        p_values: pv,
    }
}

pub fn is_compatible_pauli<T: Real>(
    p: &PauliProbabilities<T>,
    m: &BinaryMeasurement<T>,
) -> CompatVerdict<T> {
    verdict(m.bloch_point(), p_values(p))
}

/// The input rotation of the canonical decomposition acts on the measurement
/// direction; the output rotation is irrelevant.
pub fn is_compatible_unital<T: Real>(
    c: &UnitalChannel<T>,
    m: &BinaryMeasurement<T>,
) -> CompatVerdict<T> {
    let n = c.r_in().apply(&m.direction().vec());
    let rotated = Direction::from_unnormalized(n).expect("rotation preserves unit norm");
    is_compatible_pauli(&c.pauli_part(), &m.with_direction(rotated))
}

/// Largest sharpness of any measurement compatible with `p`.
pub fn max_sharpness<T: Real>(p: &PauliProbabilities<T>) -> T {
    p_values(p).p_max()
}

/// Principal axis along which [`max_sharpness`] is attained.
pub fn max_sharpness_direction<T: Real>(p: &PauliProbabilities<T>) -> Direction<T> {
    Direction::axis(p_values(p).argmax())
}

/// Four Pauli channels with `P₁ = P₂ = P₃ = s`: three equal small weights
/// and the large weight in each of the four slots.
pub fn equal_p_channels<T: Real>(s: T) -> Result<[PauliProbabilities<T>; 4]> {
    if !(s >= T::zero() && s <= T::one()) {
        return Err(Error::InvalidSharpness(s.as_f64()));
    }
    let one = T::one();
    let three = T::lit(3.0);
    let small = (one + s - ((one + three * s) * (one - s)).sqrt_clamped()) / T::lit(8.0);
    let large = one - three * small;
    Ok(std::array::from_fn(|k| {
        let mut p = [small; 4];
        p[k] = large;
        PauliProbabilities::clamped(p)
    }))
}
