use proptest::prelude::*;
use rand::Rng;

use sharpdist::channels::{
    canonical_decompose, choi_state_unital, PauliProbabilities, Rotation3, UnitalChannel,
};
use sharpdist::compat::{
    edge_touch_search, ellipsoid_contains, ellipsoid_semiaxes, is_compatible_pauli,
    is_compatible_unital, polytope_contains, sharp_direction_constraints, CompatibilityPolytope,
};
use sharpdist::linalg::Vec3;
use sharpdist::measures::{
    avg_fidelity_mc, avg_fidelity_unital, lqu_direct, lqu_pauli, p_values, quantumness_numerical,
    quantumness_pauli, MeasureReport,
};
use sharpdist::qcore::{
    haar_bloch_vector, uniform_simplex, BinaryMeasurement, Direction, SamplerConfig,
};
use sharpdist::tradeoffs::{
    best_fidelity_search, best_fidelity_unital_closed, best_lqu_search, best_lqu_unital_closed,
    SearchConfig,
};

fn simplex() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(0.0f64..1.0).prop_filter_map("nonzero", |w| {
        let s: f64 = w.iter().sum();
        (s > 1e-9).then(|| w.map(|x| x / s))
    })
}

fn direction() -> impl Strategy<Value = Direction<f64>> {
    prop::array::uniform3(-1.0f64..1.0)
        .prop_filter_map("nonzero", |v| Direction::from_unnormalized(Vec3(v)).ok())
}

fn rotation() -> impl Strategy<Value = Rotation3<f64>> {
    prop::array::uniform4(-1.0f64..1.0).prop_filter_map("nonzero", |q| {
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        (n > 1e-3).then(|| Rotation3::from_quaternion(q.map(|x| x / n)))
    })
}

fn pp(p: [f64; 4]) -> PauliProbabilities<f64> {
    PauliProbabilities::new(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn p_values_bounded(p in simplex()) {
        for v in p_values(&pp(p)).values.0 {
            prop_assert!((0.0..=1.0 + 1e-12).contains(&v));
        }
    }

    #[test]
    fn report_bounds(p in simplex(), ro in rotation(), ri in rotation()) {
        let c = UnitalChannel::from_parts(ro, pp(p), ri);
        let r = MeasureReport::unital(&c);
        prop_assert!(r.avg_fidelity >= 1.0 / 3.0 - 1e-12 && r.avg_fidelity <= 1.0 + 1e-12);
        prop_assert!(r.corrected_fidelity >= 0.5 - 1e-12 && r.corrected_fidelity <= 1.0 + 1e-12);
        prop_assert!((0.0..=1.0).contains(&r.quantumness));
        prop_assert!((0.0..=1.0).contains(&r.lqu));
    }

    #[test]
    fn quantumness_permutation_invariant(p in simplex()) {
        let q = quantumness_pauli(&pp(p));
        let r = quantumness_pauli(&pp([p[3], p[1], p[0], p[2]]));
        prop_assert!((q - r).abs() < 1e-15);
    }

    #[test]
    fn compatibility_monotone_in_sharpness(p in simplex(), n in direction(), s in 0.0f64..=1.0) {
        let p = pp(p);
        if is_compatible_pauli(&p, &BinaryMeasurement::new(s, n).unwrap()).compatible {
            for k in 0..10 {
                let t = s * k as f64 / 9.0;
                prop_assert!(is_compatible_pauli(&p, &BinaryMeasurement::new(t, n).unwrap()).compatible);
            }
        }
    }

    #[test]
    fn sharp_compatibility_nests(p in simplex(), n in direction(), s in 0.0f64..=1.0) {
        let p = pp(p);
        if is_compatible_pauli(&p, &BinaryMeasurement::new(1.0, n).unwrap()).compatible {
            prop_assert!(is_compatible_pauli(&p, &BinaryMeasurement::new(s, n).unwrap()).compatible);
        }
    }

    #[test]
    fn compatible_implies_polytope(p in simplex(), n in direction(), s in 0.0f64..=1.0) {
        let p = pp(p);
        if is_compatible_pauli(&p, &BinaryMeasurement::new(s, n).unwrap()).compatible {
            prop_assert!(polytope_contains(&CompatibilityPolytope::new(s).unwrap(), &p));
        }
    }

    #[test]
    fn unital_verdict_is_rotation_covariant(p in simplex(), ro in rotation(), ri in rotation(), n in direction(), s in 0.0f64..=1.0) {
        let c = UnitalChannel::from_parts(ro, pp(p), ri);
        let m = BinaryMeasurement::new(s, n).unwrap();
        let direct = is_compatible_unital(&c, &m);
        let canonical = is_compatible_unital(&canonical_decompose(c.bloch_matrix()).unwrap(), &m);
        // near-boundary points may flip under round-off of the decomposition
        if (direct.lhs - 1.0).abs() > 1e-9 {
            prop_assert_eq!(direct.compatible, canonical.compatible);
        }
        let (axes, orient) = ellipsoid_semiaxes(&c);
        if (direct.lhs - 1.0).abs() > 1e-9 {
            prop_assert_eq!(ellipsoid_contains(&axes, &orient, &m.bloch_point()), direct.compatible);
        }
    }

    #[test]
    fn canonical_decomposition_reconstructs(p in simplex(), ro in rotation(), ri in rotation()) {
        let c = UnitalChannel::from_parts(ro, pp(p), ri);
        let d = canonical_decompose(c.bloch_matrix()).unwrap();
        let back = UnitalChannel::from_parts(d.r_out(), d.pauli_part(), d.r_in());
        prop_assert!(back.bloch_matrix().max_abs_diff(&c.bloch_matrix()) <= 1e-10);
    }

    #[test]
    fn lqu_unitary_invariance(p in simplex(), ro in rotation(), ri in rotation()) {
        let c = UnitalChannel::from_parts(ro, pp(p), ri);
        let l = lqu_direct(&choi_state_unital(&c)).unwrap();
        prop_assert!((l - lqu_pauli(&pp(p))).abs() < 1e-9);
    }
}

#[test]
fn quantumness_oracle_unitary_invariance() {
    let mut rng = SamplerConfig::new(31, 1).unwrap().rng();
    let mut worst = 0.0f64;
    for k in 0..1000u64 {
        let p = pp(uniform_simplex(&mut rng));
        let c = UnitalChannel::from_parts(Rotation3::random(&mut rng), p, Rotation3::random(&mut rng));
        let q = quantumness_numerical(&c, SamplerConfig::new(k, 4000).unwrap(), 8).unwrap();
        worst = worst.max((q - quantumness_pauli(&p)).abs());
    }
    assert!(worst < 0.03, "{worst}");
}

#[test]
fn mc_fidelity_with_rotations() {
    let mut rng = SamplerConfig::new(41, 1).unwrap().rng();
    for k in 0..100u64 {
        let p = pp(uniform_simplex(&mut rng));
        let c = UnitalChannel::from_parts(Rotation3::random(&mut rng), p, Rotation3::random(&mut rng));
        let e = avg_fidelity_mc(&c, SamplerConfig::new(k, 20_000).unwrap()).unwrap();
        assert!((e.mean - avg_fidelity_unital(&c)).abs() <= 4.0 * e.std_err);
    }
}

#[test]
fn ellipsoid_membership_matches_criterion() {
    let mut rng = SamplerConfig::new(51, 1).unwrap().rng();
    for _ in 0..10_000 {
        let p = pp(uniform_simplex(&mut rng));
        let c = UnitalChannel::from_parts(Rotation3::random(&mut rng), p, Rotation3::random(&mut rng));
        let n = Direction::new(Vec3(haar_bloch_vector(&mut rng))).unwrap();
        let m = BinaryMeasurement::new(rng.random::<f64>(), n).unwrap();
        let v = is_compatible_unital(&c, &m);
        let (axes, orient) = ellipsoid_semiaxes(&c);
        assert_eq!(ellipsoid_contains(&axes, &orient, &m.bloch_point()), v.compatible);
    }
}

#[test]
fn monotone_in_sharpness_bulk() {
    let mut rng = SamplerConfig::new(61, 1).unwrap().rng();
    for _ in 0..10_000 {
        let p = pp(uniform_simplex(&mut rng));
        let n = Direction::new(Vec3(haar_bloch_vector(&mut rng))).unwrap();
        let s: f64 = rng.random();
        if is_compatible_pauli(&p, &BinaryMeasurement::new(s, n).unwrap()).compatible {
            for k in 0..10 {
                let t = s * k as f64 / 9.0;
                assert!(is_compatible_pauli(&p, &BinaryMeasurement::new(t, n).unwrap()).compatible);
            }
        }
    }
}

#[test]
fn edge_touching_only_on_principal_axes() {
    let s: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
    let diag = Direction::from_unnormalized(Vec3::new(1.0, 1.0, 1.0)).unwrap();
    let r = edge_touch_search(&diag, &s, 1e-6, SamplerConfig::new(71, 1_000_000).unwrap()).unwrap();
    assert_eq!(r.samples, 1_000_000);
    assert_eq!(r.compatible_near_edge, 0, "{r:?}");

    // the midpoint of q1 and its swap lies on an edge and is compatible along x
    for s in [0.3, 0.6, 0.85, 1.0] {
        let poly = CompatibilityPolytope::new(s).unwrap();
        let mid = pp([0.5, 0.5, 0.0, 0.0]);
        assert!(poly.distance_to_edges(&mid) < 1e-15);
        assert!(is_compatible_pauli(&mid, &BinaryMeasurement::new(s, Direction::x()).unwrap()).compatible);
    }
    let r = edge_touch_search(&Direction::x(), &s, 1e-6, SamplerConfig::new(72, 100_000).unwrap()).unwrap();
    assert!(r.compatible_near_edge > 0);
}

#[test]
fn sharp_sets_verified_by_criterion() {
    let mut rng = SamplerConfig::new(81, 1).unwrap().rng();
    for _ in 0..1000 {
        let n = Direction::new(Vec3(haar_bloch_vector(&mut rng))).unwrap();
        let set = sharp_direction_constraints(&n);
        let m = BinaryMeasurement::new(1.0, n).unwrap();
        let p = set.point(rng.random());
        assert!(is_compatible_pauli(&p, &m).compatible);
    }
}

#[test]
fn searches_without_injection_converge_from_below() {
    for grid in [10usize, 20, 40] {
        let cfg = SearchConfig {
            simplex_grid: grid,
            direction_grid: 3,
            refine_steps: 2,
            inject_candidates: false,
        };
        for k in 0..=5 {
            let s = k as f64 / 5.0;
            let m = BinaryMeasurement::new(s, Direction::x()).unwrap();
            let f = best_fidelity_search(&m, &cfg).unwrap().value;
            let l = best_lqu_search(&m, &cfg).unwrap().value;
            assert!(f <= best_fidelity_unital_closed(s) + 1e-9);
            assert!(l <= best_lqu_unital_closed(s) + 1e-9);
            assert!(best_fidelity_unital_closed(s) - f <= 2.0 / grid as f64, "grid {grid} s {s} f {f}");
            assert!(best_lqu_unital_closed(s) - l <= 2.0 / grid as f64, "grid {grid} s {s} l {l}");
        }
    }
}

#[test]
fn single_precision_path() {
    let p = PauliProbabilities::<f32>::new([0.4, 0.3, 0.2, 0.1]).unwrap();
    let pv = p_values(&p);
    for (got, want) in pv.values.0.iter().zip([0.975663f32, 0.912096, 0.889898]) {
        assert!((got - want).abs() < 1e-5);
    }
    assert!((lqu_pauli(&p) - 0.024337).abs() < 1e-5);
    assert!((quantumness_pauli(&p) - 0.02).abs() < 1e-6);
    let m = BinaryMeasurement::new(0.9f32, Direction::x()).unwrap();
    let v = is_compatible_pauli(&p, &m);
    assert!(v.compatible && (v.lhs - 0.850913).abs() < 1e-4);
    let c = UnitalChannel::<f32>::pauli(p);
    let l = lqu_direct(&choi_state_unital(&c)).unwrap();
    assert!((l - 0.024337).abs() < 1e-3, "{l}");
    let mut rng = SamplerConfig::new(3, 1).unwrap().rng();
    let r = Rotation3::<f32>::random(&mut rng);
    let d = canonical_decompose(UnitalChannel::from_parts(r, p, Rotation3::identity()).bloch_matrix()).unwrap();
    for (a, b) in d.pauli_part().sorted_desc().iter().zip(p.sorted_desc()) {
        assert!((a - b).abs() < 1e-4);
    }
}
