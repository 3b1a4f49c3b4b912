use serde::{Deserialize, Serialize};

use crate::arrowgroup::DEFAULT_CAP;
use crate::cliffalg::MAX_EXACT_N;

/// Numerical tolerances and size caps shared by every check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Bound on `‖RᵀR − I‖_max` and on rotation residuals.
    pub orthogonality_tol: f64,
    /// Bound on `|H_numeric − H_analytic|`.
    pub curvature_tol: f64,
    /// Singular values at or below this count as zero.
    pub nullspace_cutoff: f64,
    /// Bound on `|det − 1|`.
    pub determinant_tol: f64,
    /// Bound on the unitarity defect accepted by realification.
    pub unitarity_tol: f64,
    /// Bound on join inversion residuals.
    pub join_tol: f64,
    /// Finite-difference step for mean curvature.
    pub step: f64,
    pub group_cap: usize,
    pub max_exact_n: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            orthogonality_tol: 1e-10,
            curvature_tol: 1e-4,
            nullspace_cutoff: 1e-9,
            determinant_tol: 1e-8,
            unitarity_tol: 1e-8,
            join_tol: 1e-9,
            step: 1e-3,
            group_cap: DEFAULT_CAP,
            max_exact_n: MAX_EXACT_N,
            seed: 0,
        }
    }
}

impl Config {
    /// Name of the environment variable holding a default config path.
    pub const ENV_PATH: &'static str = "ARROWALG_CONFIG";

    /// Every tolerance positive and finite, caps nonzero, exact cap in range.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let tols = [
            ("orthogonality_tol", self.orthogonality_tol),
            ("curvature_tol", self.curvature_tol),
            ("nullspace_cutoff", self.nullspace_cutoff),
            ("determinant_tol", self.determinant_tol),
            ("unitarity_tol", self.unitarity_tol),
            ("join_tol", self.join_tol),
            ("step", self.step),
        ];
        for (name, v) in tols {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{name} must be positive and finite, got {v}"));
            }
        }
        if self.group_cap < 2 {
            return Err("group_cap must be at least 2".into());
        }
        if self.max_exact_n == 0 || self.max_exact_n > MAX_EXACT_N {
            return Err(format!("max_exact_n must lie in 1..={MAX_EXACT_N}"));
        }
        Ok(())
    }
}
