use std::fmt;

/// A failed check together with the text it failed on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub text: Vec<u8>,
    pub witness: String,
}

/// Outcome of a verification sweep. Passes iff `violations` is empty.
///
/// `flagged` counts configurations that were recorded but deliberately not
/// asserted (tied marker positions in the marker-gap suite).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub texts: u64,
    pub checks: u64,
    pub flagged: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn check(&mut self, ok: bool, text: &[u8], witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                text: text.to_vec(),
                witness: witness(),
            });
        }
    }

    /// Folds `other` into `self`; associative, keeps violation order.
    pub fn merge(&mut self, other: VerificationReport) {
        self.texts += other.texts;
        self.checks += other.checks;
        self.flagged += other.flagged;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} texts, {} checks, {} violations",
            self.suite,
            self.texts,
            self.checks,
            self.violations.len()
        )?;
        if self.flagged > 0 {
            write!(f, ", {} flagged", self.flagged)?;
        }
        Ok(())
    }
}
