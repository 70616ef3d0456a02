//! Compatibility between qubit channels and unsharp measurements, plus the
//! sharpness/disturbance tradeoffs that follow from it.
//!
//! Everything is generic over the scalar type through [`Real`]; `f64` and
//! `f32` aliases are provided below.

// `!(x <= tol)` style guards are used on purpose so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod compat;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod qcore;
pub mod real;
pub mod tradeoffs;
pub mod verify;

pub use error::{Error, Result};
pub use real::{Real, Tolerances};

pub type Vec3F64 = linalg::Vec3<f64>;
pub type Mat3F64 = linalg::Mat3<f64>;
pub type QubitStateF64 = qcore::QubitState<f64>;
pub type DirectionF64 = qcore::Direction<f64>;
pub type BinaryMeasurementF64 = qcore::BinaryMeasurement<f64>;
pub type PauliProbabilitiesF64 = channels::PauliProbabilities<f64>;
pub type UnitalChannelF64 = channels::UnitalChannel<f64>;
pub type Rotation3F64 = channels::Rotation3<f64>;
pub type ChoiStateF64 = channels::ChoiState<f64>;
pub type PValuesF64 = measures::PValues<f64>;
pub type MeasureReportF64 = measures::MeasureReport<f64>;
pub type CompatVerdictF64 = compat::CompatVerdict<f64>;
pub type CompatibilityPolytopeF64 = compat::CompatibilityPolytope<f64>;
pub type TradeoffPointF64 = tradeoffs::TradeoffPoint<f64>;

pub type Vec3F32 = linalg::Vec3<f32>;
pub type Mat3F32 = linalg::Mat3<f32>;
pub type QubitStateF32 = qcore::QubitState<f32>;
pub type DirectionF32 = qcore::Direction<f32>;
pub type BinaryMeasurementF32 = qcore::BinaryMeasurement<f32>;
pub type PauliProbabilitiesF32 = channels::PauliProbabilities<f32>;
pub type UnitalChannelF32 = channels::UnitalChannel<f32>;
pub type Rotation3F32 = channels::Rotation3<f32>;
pub type ChoiStateF32 = channels::ChoiState<f32>;
pub type PValuesF32 = measures::PValues<f32>;
pub type MeasureReportF32 = measures::MeasureReport<f32>;
pub type CompatVerdictF32 = compat::CompatVerdict<f32>;
pub type CompatibilityPolytopeF32 = compat::CompatibilityPolytope<f32>;
pub type TradeoffPointF32 = tradeoffs::TradeoffPoint<f32>;
