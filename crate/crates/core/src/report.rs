//! Verification reports: one per lemma run, serializable to JSON.

use std::fmt;

use serde::Serialize;

use crate::linear::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    /// Coordinates of the inputs that produced the failure.
    pub coordinates: Vec<Vec<Scalar>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub lemma_id: String,
    pub family: String,
    pub parameters: Vec<(String, String)>,
    pub applicable: bool,
    pub trials: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    /// Computed quantities worth reporting whether or not a check used them.
    pub observations: Vec<(String, String)>,
}

impl Report {
    pub fn new(lemma_id: &str, family: &str) -> Self {
        Report {
            lemma_id: lemma_id.to_string(),
            family: family.to_string(),
            parameters: Vec::new(),
            applicable: true,
            trials: 0,
            passes: 0,
            failures: Vec::new(),
            observations: Vec::new(),
        }
    }

    pub fn not_applicable(lemma_id: &str, family: &str, reason: &str) -> Self {
        let mut r = Report::new(lemma_id, family);
        r.applicable = false;
        r.observe("reason", reason);
        r
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub fn observe(&mut self, key: &str, value: impl fmt::Display) {
        self.observations.push((key.to_string(), value.to_string()));
    }

    /// Records one check; `coords` are attached only on failure.
    pub fn check(
        &mut self,
        name: &str,
        ok: bool,
        coords: impl FnOnce() -> Vec<Vec<Scalar>>,
        detail: impl FnOnce() -> String,
    ) {
        if ok {
            self.passes += 1;
        } else {
            self.failures.push(Failure {
                check: name.to_string(),
                coordinates: coords(),
                detail: detail(),
            });
        }
    }

    /// A check with no inputs to report.
    pub fn assert(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.check(name, ok, Vec::new, detail);
    }

    /// `expected == found`, with both in the failure detail.
    pub fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, name: &str, expected: T, found: T) {
        let ok = expected == found;
        self.assert(name, ok, || {
            format!("expected {expected:?}, found {found:?}")
        });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Failures whose check name starts with `prefix`.
    pub fn failures_of(&self, prefix: &str) -> Vec<&Failure> {
        self.failures
            .iter()
            .filter(|f| f.check.starts_with(prefix))
            .collect()
    }

    pub fn merge(&mut self, other: Report) {
        self.trials += other.trials;
        self.passes += other.passes;
        self.failures.extend(other.failures);
        self.observations.extend(other.observations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if !self.applicable {
            "n/a"
        } else if self.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        write!(
            f,
            "{:<24} {:<10} {:<5} checks={} failures={}",
            self.lemma_id,
            self.family,
            status,
            self.passes + self.failures.len(),
            self.failures.len()
        )?;
        if self.trials > 0 {
            write!(f, " trials={}", self.trials)?;
        }
        for (k, v) in &self.observations {
            write!(f, "\n    {k}: {v}")?;
        }
        for fl in &self.failures {
            write!(f, "\n    FAILED {}: {}", fl.check, fl.detail)?;
            for c in &fl.coordinates {
                let s: Vec<String> = c.iter().map(Scalar::to_string).collect();
                write!(f, "\n        [{}]", s.join(", "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_passes_and_failures() {
        let mut r = Report::new("x", "so(1,2)");
        r.assert("a", true, String::new);
        r.check("b", false, || vec![vec![Scalar::ONE]], || "bad".into());
        r.expect_eq("c", 3, 3);
        assert_eq!(r.passes, 2);
        assert_eq!(r.failures.len(), 1);
        assert!(!r.passed());
        assert_eq!(r.failures_of("b").len(), 1);
        assert!(r.to_string().contains("FAILED b: bad"));
    }
}
