//! Per-check records shared by the verification suites and the CLI.

use std::fmt;

use serde::Serialize;

/// One recomputed claim: what was expected, what came out, and whether they
/// agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub instance: String,
    pub claimed: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(instance: &str, claimed: &str, computed: impl Into<String>, pass: bool) -> Self {
        CheckReport {
            instance: instance.to_string(),
            claimed: claimed.to_string(),
            computed: computed.into(),
            pass,
        }
    }

    /// Passes when the rendered value equals `claimed` exactly.
    pub fn eq(instance: &str, claimed: &str, computed: impl fmt::Display) -> Self {
        let computed = computed.to_string();
        let pass = computed == claimed;
        CheckReport::new(instance, claimed, computed, pass)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: claimed {}, computed {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.instance,
            self.claimed,
            self.computed
        )
    }
}

/// True when every report passes.
pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
