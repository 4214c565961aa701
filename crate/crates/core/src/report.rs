//! Law-check reports.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one law on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub suite: String,
    pub law: String,
    pub instance: String,
    pub verdict: Verdict,
    /// First counterexample found, if any.
    pub witness: Option<String>,
    /// Number of cases evaluated.
    pub checked: u64,
}

/// An ordered collection of law results.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<LawResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: LawResult) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[LawResult] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<LawResult> {
        self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_pass())
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.entries.iter().filter(|e| !e.verdict.is_pass())
    }

    /// First entry for `law`, in any instance.
    pub fn law(&self, law: &str) -> Option<&LawResult> {
        self.entries.iter().find(|e| e.law == law)
    }

    /// Total number of evaluated cases.
    pub fn checked(&self) -> u64 {
        self.entries.iter().map(|e| e.checked).sum()
    }

    /// Sorts by suite, then law name, then instance, then witness.
    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| {
            (&a.suite, &a.law, &a.instance, &a.witness).cmp(&(&b.suite, &b.law, &b.instance, &b.witness))
        });
    }
}

impl IntoIterator for Report {
    type Item = LawResult;
    type IntoIter = alloc::vec::IntoIter<LawResult>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

/// Index of a law registered with a [`Checker`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LawId(usize);

/// Accumulates pass/fail counts for a fixed suite and instance.
///
/// Laws are registered up front with [`Checker::law`]; each call to
/// [`Checker::record`] counts one case and keeps the first witness.
#[derive(Debug)]
pub struct Checker {
    suite: String,
    instance: String,
    laws: Vec<(String, u64, Option<String>)>,
}

impl Checker {
    pub fn new(suite: impl Into<String>, instance: impl Into<String>) -> Self {
        Self { suite: suite.into(), instance: instance.into(), laws: Vec::new() }
    }

    pub fn law(&mut self, name: &str) -> LawId {
        if let Some(pos) = self.laws.iter().position(|(n, _, _)| n == name) {
            return LawId(pos);
        }
        self.laws.push((name.into(), 0, None));
        LawId(self.laws.len() - 1)
    }

    pub fn record<W: FnOnce() -> String>(&mut self, law: LawId, ok: bool, witness: W) -> bool {
        let slot = &mut self.laws[law.0];
        slot.1 += 1;
        if !ok && slot.2.is_none() {
            slot.2 = Some(witness());
        }
        ok
    }

    /// Registers and records a single case in one go.
    pub fn check<W: FnOnce() -> String>(&mut self, law: &str, ok: bool, witness: W) -> bool {
        let id = self.law(law);
        self.record(id, ok, witness)
    }

    pub fn failed(&self, law: LawId) -> bool {
        self.laws[law.0].2.is_some()
    }

    pub fn any_failed(&self) -> bool {
        self.laws.iter().any(|l| l.2.is_some())
    }

    pub fn finish(self) -> Report {
        let Checker { suite, instance, mut laws } = self;
        laws.sort_by(|a, b| a.0.cmp(&b.0));
        let entries = laws
            .into_iter()
            .map(|(law, checked, witness)| LawResult {
                suite: suite.clone(),
                law,
                instance: instance.clone(),
                verdict: Verdict::from_bool(witness.is_none()),
                witness,
                checked,
            })
            .collect();
        Report { entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn checker_keeps_first_witness() {
        let mut c = Checker::new("s", "i");
        let id = c.law("assoc");
        c.record(id, true, || "never".to_string());
        c.record(id, false, || "first".to_string());
        c.record(id, false, || "second".to_string());
        let r = c.finish();
        assert_eq!(r.len(), 1);
        let e = &r.entries()[0];
        assert_eq!(e.verdict, Verdict::Fail);
        assert_eq!(e.witness.as_deref(), Some("first"));
        assert_eq!(e.checked, 3);
    }

    #[test]
    fn laws_sorted_by_name() {
        let mut c = Checker::new("s", "i");
        c.check("zeta", true, String::new);
        c.check("alpha", true, String::new);
        let r = c.finish();
        assert_eq!(r.entries()[0].law, "alpha");
        assert!(r.passed());
    }
}
