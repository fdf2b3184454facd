//! Outcome of a verification run.

use alloc::string::String;
use alloc::vec::Vec;

/// One checked instance of an identity, such as `n=4, j=2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub n: usize,
    pub pass: bool,
    /// Both sides in canonical text form; only kept for failing checks.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub theorem: String,
    /// The size bound the run covered (`n` or `N` depending on the identity).
    pub bound: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(theorem: impl Into<String>, bound: usize) -> Self {
        Report { theorem: theorem.into(), bound, checks: Vec::new() }
    }

    /// Records an instance. Both sides are rendered only when they differ.
    pub fn compare<T: PartialEq + core::fmt::Display>(
        &mut self,
        label: impl Into<String>,
        n: usize,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        let pass = lhs == rhs;
        let (l, r) = if pass {
            (None, None)
        } else {
            (Some(alloc::format!("{lhs}")), Some(alloc::format!("{rhs}")))
        };
        self.checks.push(Check { label: label.into(), n, pass, lhs: l, rhs: r });
        pass
    }

    pub fn record(&mut self, label: impl Into<String>, n: usize, pass: bool) -> bool {
        self.checks.push(Check { label: label.into(), n, pass, lhs: None, rhs: None });
        pass
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_mismatch(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Appends another report's checks, prefixing their labels.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.label = alloc::format!("{}: {}", other.theorem, c.label);
            self.checks.push(c);
        }
    }
}
