use sharpdist::channels::{PauliProbabilities, UnitalChannel};
use sharpdist::linalg::{Mat3, Vec3};
use sharpdist::qcore::{BinaryMeasurement, Direction};

use crate::CliError;

const PROB_TOL: f64 = 1e-9;

pub fn floats(flag: &str, text: &str, expected: usize) -> Result<Vec<f64>, CliError> {
    let values: Vec<f64> = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--{flag}: expected {expected} comma-separated numbers, got '{text}'")))?;
    if values.len() != expected {
        return Err(CliError::Usage(format!(
            "--{flag}: expected {expected} comma-separated numbers, got {}",
            values.len()
        )));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(CliError::Usage(format!("--{flag}: non-finite entry {bad}")));
    }
    Ok(values)
}

/// Checked against the 1e-9 tolerance first, then rescaled to sum exactly to 1.
pub fn probabilities(text: &str) -> Result<PauliProbabilities<f64>, CliError> {
    let v = floats("p", text, 4)?;
    if let Some((i, x)) = v.iter().enumerate().find(|(_, &x)| x < -PROB_TOL) {
        return Err(CliError::Invalid(format!(
            "--p: entry p{i} = {x} is negative"
        )));
    }
    let sum: f64 = v.iter().sum();
    if (sum - 1.0).abs() > PROB_TOL {
        return Err(CliError::Invalid(format!(
            "--p: entries sum to {sum}, not 1 (tolerance {PROB_TOL:e})"
        )));
    }
    let clipped: Vec<f64> = v.iter().map(|x| x.max(0.0)).collect();
    let total: f64 = clipped.iter().sum();
    let p = [0, 1, 2, 3].map(|i| clipped[i] / total);
    PauliProbabilities::new(p).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn bloch_matrix(text: &str) -> Result<UnitalChannel<f64>, CliError> {
    let v = floats("t", text, 9)?;
    let t = Mat3::from_fn(|i, j| v[3 * i + j]);
    UnitalChannel::from_bloch_matrix(t).map_err(|e| CliError::Invalid(format!("--t: {e}")))
}

pub fn direction(text: &str) -> Result<Direction<f64>, CliError> {
    let v = floats("n", text, 3)?;
    Direction::new(Vec3::new(v[0], v[1], v[2])).map_err(|e| CliError::Invalid(format!("--n: {e}")))
}

pub fn measurement(s: f64, n: &str) -> Result<BinaryMeasurement<f64>, CliError> {
    if !(0.0..=1.0).contains(&s) {
        return Err(CliError::Invalid(format!("--s: sharpness {s} outside [0, 1]")));
    }
    BinaryMeasurement::new(s, direction(n)?).map_err(|e| CliError::Invalid(e.to_string()))
}

/// Either `--p` or `--t` must be given, not both.
pub fn channel(p: Option<&str>, t: Option<&str>) -> Result<UnitalChannel<f64>, CliError> {
    match (p, t) {
        (Some(p), None) => Ok(UnitalChannel::pauli(probabilities(p)?)),
        (None, Some(t)) => bloch_matrix(t),
        (Some(_), Some(_)) => Err(CliError::Usage("give either --p or --t, not both".into())),
        (None, None) => Err(CliError::Usage("one of --p or --t is required".into())),
    }
}
