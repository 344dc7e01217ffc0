//! Structured pass/fail reports for axiom checkers.
//!
//! Every checker returns a [`Report`]: a list of named identities, each with
//! a pass flag and up to [`MAX_WITNESSES`] basis-index witnesses for the
//! failing instances. Reports are deterministic: identities appear in a fixed
//! order and witnesses in lexicographic index order.

use alloc::string::String;
use alloc::vec::Vec;

/// Witness cap per identity; enough to act on, small enough to read.
pub const MAX_WITNESSES: usize = 16;

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    /// Identity tag, e.g. `"LPA2"` or `"GMD3-assoc"`.
    pub identity: String,
    pub pass: bool,
    /// Basis-index witnesses of failures, capped at [`MAX_WITNESSES`].
    pub witnesses: Vec<Vec<usize>>,
    /// Total number of failing instances (may exceed `witnesses.len()`).
    pub failure_count: usize,
    /// True for checks that are reported but never asserted (e.g. the
    /// bimodule-axiom probe, which is not required to hold).
    pub informational: bool,
}

impl CheckItem {
    pub fn new(identity: &str) -> CheckItem {
        CheckItem {
            identity: String::from(identity),
            pass: true,
            witnesses: Vec::new(),
            failure_count: 0,
            informational: false,
        }
    }

    pub fn informational(identity: &str) -> CheckItem {
        let mut item = CheckItem::new(identity);
        item.informational = true;
        item
    }

    /// Records one failing basis tuple.
    pub fn fail(&mut self, witness: &[usize]) {
        self.pass = false;
        self.failure_count += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness.to_vec());
        }
    }

    /// Folds a boolean check into the item.
    pub fn check(&mut self, ok: bool, witness: &[usize]) {
        if !ok {
            self.fail(witness);
        }
    }
}

/// A deterministic collection of checked identities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    /// Merges another report, prefixing its identity tags.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut item in other.items {
            item.identity = alloc::format!("{prefix}{}", item.identity);
            self.items.push(item);
        }
    }

    /// True when every non-informational identity passed.
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass || i.informational)
    }

    /// First failing identity tag, if any.
    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.pass && !i.informational)
    }

    pub fn item(&self, identity: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.identity == identity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_cap() {
        let mut item = CheckItem::new("T");
        for i in 0..40 {
            item.fail(&[i]);
        }
        assert_eq!(item.witnesses.len(), MAX_WITNESSES);
        assert_eq!(item.failure_count, 40);
        assert!(!item.pass);
    }

    #[test]
    fn informational_does_not_fail_report() {
        let mut r = Report::new();
        let mut info = CheckItem::informational("bimodule");
        info.fail(&[0]);
        r.push(info);
        assert!(r.pass());
        assert!(r.first_failure().is_none());
    }
}
