//! Channel/measurement compatibility: the criterion itself, the compatibility
//! polytope, the measurement ellipsoid, the sharp-measurement structure and
//! sampling utilities used to probe them.

mod criterion;
mod ellipsoid;
mod lp;
mod polytope;
mod sampling;
mod sharp;

pub use criterion::{
    criterion_lhs, is_compatible_pauli, is_compatible_unital, max_sharpness,
    max_sharpness_direction, equal_p_channels, CompatVerdict,
};
pub use ellipsoid::{ellipsoid_contains, ellipsoid_semiaxes};
pub use lp::in_convex_hull;
pub use polytope::{facet_p_values, polytope_contains, CompatibilityPolytope};
pub use sampling::{
    edge_touch_search, rejection_sample_fixed, rejection_sample_triples, simplex_grid,
    CompatibleSample, EdgeTouchReport, RejectionReport, SimplexGrid,
};
pub use sharp::{sharp_direction_constraints, SharpCompatibleSet};
