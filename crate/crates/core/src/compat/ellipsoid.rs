use super::criterion_lhs;
use crate::channels::{Rotation3, UnitalChannel};
use crate::linalg::Vec3;
use crate::measures::{p_values, PValues};
use crate::real::{tol, Real};

/// Semiaxes of the compatible-measurement ellipsoid and the rotation whose
/// columns are its principal axes in the measurement frame.
pub fn ellipsoid_semiaxes<T: Real>(c: &UnitalChannel<T>) -> (PValues<T>, Rotation3<T>) {
    (p_values(&c.pauli_part()), c.r_in().inverse())
}

/// Whether the Bloch point `s·n̂` lies inside the ellipsoid.
pub fn ellipsoid_contains<T: Real>(
    semiaxes: &PValues<T>,
    orientation: &Rotation3<T>,
    point: &Vec3<T>,
) -> bool {
    let local = orientation.inverse().apply(point);
    criterion_lhs(&local, semiaxes) <= T::one() + tol::<T>().exact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::PauliProbabilities;
    use crate::compat::is_compatible_unital;
    use crate::qcore::{haar_bloch_vector, uniform_simplex, BinaryMeasurement, Direction, SamplerConfig};
    use rand::Rng;

    #[test]
    fn examples() {
        let (a, _) = ellipsoid_semiaxes(&UnitalChannel::pauli(PauliProbabilities::<f64>::depolarizing_center()));
        assert!(a.values.max_abs_diff(&Vec3::new(1.0, 1.0, 1.0)) < 1e-15);
        let (a, _) = ellipsoid_semiaxes(&UnitalChannel::<f64>::identity());
        assert_eq!(a.values, Vec3::zero());
        let p = PauliProbabilities::new([0.4, 0.3, 0.2, 0.1]).unwrap();
        let (a, r) = ellipsoid_semiaxes(&UnitalChannel::pauli(p));
        assert!(a.values.max_abs_diff(&Vec3::new(0.975663, 0.912096, 0.889898)) < 1e-6);
        assert_eq!(r.matrix(), Rotation3::identity().matrix());
        assert!(ellipsoid_contains(&a, &r, &Vec3::new(0.975663 - 1e-6, 0.0, 0.0)));
        assert!(!ellipsoid_contains(&a, &r, &Vec3::new(0.975663 + 1e-6, 0.0, 0.0)));
    }

    #[test]
    fn membership_matches_criterion() {
        let mut rng = SamplerConfig::new(77, 1).unwrap().rng();
        let mut inside = 0;
        for _ in 0..2000 {
            let p = PauliProbabilities::new(uniform_simplex(&mut rng)).unwrap();
            let c = UnitalChannel::from_parts(Rotation3::random(&mut rng), p, Rotation3::random(&mut rng));
            let n = Direction::new(Vec3(haar_bloch_vector(&mut rng))).unwrap();
            let m = BinaryMeasurement::new(rng.random::<f64>(), n).unwrap();
            let (a, r) = ellipsoid_semiaxes(&c);
            let got = ellipsoid_contains(&a, &r, &m.bloch_point());
            assert_eq!(got, is_compatible_unital(&c, &m).compatible);
            inside += got as usize;
        }
        assert!(inside > 100 && inside < 1900);
    }
}
