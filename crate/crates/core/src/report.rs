//! Structured verdicts of the condition checkers.

use crate::error::{Result, WcpError};
use crate::tensor::Mor;

/// What an entry asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// A hypothesis or defining condition.
    Condition,
    /// An identity that must follow from conditions that passed.
    Consequence,
    /// Informational comparison; never affects the overall verdict.
    Probe,
}

/// The two sides of an equation that did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub lhs: Mor,
    pub rhs: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub role: Role,
    pub failure: Option<Failure>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub title: String,
    pub notes: Vec<String>,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn push_eq(&mut self, name: &str, role: Role, lhs: Mor, rhs: Mor) -> bool {
        let passed = lhs == rhs;
        self.entries.push(CheckEntry {
            name: name.to_string(),
            passed,
            role,
            failure: (!passed).then_some(Failure { lhs, rhs }),
            note: None,
        });
        passed
    }

    /// Records the equation `lhs = rhs` as a condition.
    pub fn equation(&mut self, name: &str, lhs: Mor, rhs: Mor) -> bool {
        self.push_eq(name, Role::Condition, lhs, rhs)
    }

    /// Records the equation `lhs = rhs` as a derived consequence.
    pub fn consequence(&mut self, name: &str, lhs: Mor, rhs: Mor) -> bool {
        self.push_eq(name, Role::Consequence, lhs, rhs)
    }

    /// Records an informational comparison.
    pub fn probe(&mut self, name: &str, lhs: Mor, rhs: Mor) -> bool {
        self.push_eq(name, Role::Probe, lhs, rhs)
    }

    /// Records a verdict that is not an equation between two maps.
    pub fn record(&mut self, name: &str, passed: bool, note: Option<String>) {
        self.entries.push(CheckEntry {
            name: name.to_string(),
            passed,
            role: Role::Condition,
            failure: None,
            note,
        });
    }

    /// Appends all entries (and notes) of `other`.
    pub fn extend(&mut self, other: CheckReport) {
        self.notes.extend(other.notes);
        self.entries.extend(other.entries);
    }

    /// True iff every non-probe entry passed.
    pub fn all_passed(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| e.role != Role::Probe)
            .all(|e| e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Verdict of the named entry; `None` if absent.
    pub fn passed(&self, name: &str) -> Option<bool> {
        self.get(name).map(|e| e.passed)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| !e.passed && e.role != Role::Probe)
            .map(|e| e.name.clone())
            .collect()
    }

    /// `Ok(self)` if every non-probe entry passed, else an invariant failure.
    pub fn ensure(self, context: &str) -> Result<CheckReport> {
        if self.all_passed() {
            Ok(self)
        } else {
            Err(WcpError::InvariantFailed {
                context: context.to_string(),
                report: Box::new(self),
            })
        }
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::tensor::Obj;

    #[test]
    fn probes_do_not_affect_verdict() {
        let x = Obj::new("X", 1).unwrap();
        let id = Mor::identity(Field::Rationals, &x);
        let zero = Mor::zero(Field::Rationals, &x, &x);
        let mut r = CheckReport::new("t");
        assert!(r.equation("a", id.clone(), id.clone()));
        assert!(!r.probe("p", id.clone(), zero.clone()));
        assert!(r.all_passed());
        assert!(!r.consequence("c", id, zero));
        assert!(!r.all_passed());
        assert_eq!(r.failed_names(), vec!["c".to_string()]);
        assert!(r.get("c").unwrap().failure.is_some());
        assert_eq!(r.passed("a"), Some(true));
        assert_eq!(r.passed("zz"), None);
    }
}
