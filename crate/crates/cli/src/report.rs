//! Pass/fail reporting for the verification suite.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Outcome of one registered invariant check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
}

/// Full verification run: one entry per registered invariant.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub samples: u32,
    pub perturb: f64,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl RunReport {
    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// Human-readable table, one line per check.
    pub fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:width$}  {:6}  {:>13}  {:>9}",
            "check", "status", "residual", "tolerance"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:width$}  {:6}  {:>13.3e}  {:>9.1e}",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.residual,
                c.tolerance
            );
        }
        let _ = writeln!(
            out,
            "{} of {} checks passed (seed {}, samples {})",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.seed,
            self.samples
        );
        out
    }
}
