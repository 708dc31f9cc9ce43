//! Numerical zero reports shared by every Riemann-hypothesis check.

use num_complex::Complex64;
use serde::Serialize;

/// One located zero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroPoint {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    /// Distance from the critical value, in whatever unit the producer states.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroReport {
    /// Name of the variable the zeros live in (`"omega"`, `"t"`, `"u"`, ...).
    pub variable: String,
    /// Modulus every zero should have if the hypothesis holds.
    pub target_modulus: f64,
    /// Bound applied to `max_deviation`.
    pub bound: f64,
    pub zeros: Vec<ZeroPoint>,
    pub max_deviation: f64,
    pub max_residual: f64,
    pub verdict: bool,
}

impl ZeroReport {
    /// Build a report whose deviation is `| |z| - target |`.
    pub fn from_moduli(
        variable: &str,
        zeros: &[Complex64],
        target_modulus: f64,
        bound: f64,
        max_residual: f64,
    ) -> Self {
        let points: Vec<ZeroPoint> = zeros
            .iter()
            .map(|z| ZeroPoint {
                re: z.re,
                im: z.im,
                modulus: z.norm(),
                deviation: (z.norm() - target_modulus).abs(),
            })
            .collect();
        Self::assemble(variable, points, target_modulus, bound, max_residual)
    }

    /// Build a report with caller-supplied deviations.
    pub fn assemble(
        variable: &str,
        zeros: Vec<ZeroPoint>,
        target_modulus: f64,
        bound: f64,
        max_residual: f64,
    ) -> Self {
        let max_deviation = zeros.iter().map(|z| z.deviation).fold(0.0, f64::max);
        ZeroReport {
            variable: variable.to_string(),
            target_modulus,
            bound,
            verdict: zeros.iter().all(|z| z.deviation <= bound),
            zeros,
            max_deviation,
            max_residual,
        }
    }
}
