//! Check reports: ordered verdicts with concrete witnesses, plus named counts.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    /// Concrete elements, subsets or structures exhibiting a failure. Empty on success.
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub verdicts: Vec<Verdict>,
    pub counts: Vec<(String, usize)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Report::default()
        }
    }

    pub fn check(&mut self, check: impl Into<String>, pass: bool, witness: Vec<String>) {
        self.verdicts.push(Verdict {
            check: check.into(),
            pass,
            witness: if pass { Vec::new() } else { witness },
        });
    }

    /// Record a check whose failure witness is an optional value.
    pub fn check_none<T>(&mut self, check: impl Into<String>, counterexample: Option<T>)
    where
        T: Into<Vec<String>>,
    {
        match counterexample {
            None => self.check(check, true, Vec::new()),
            Some(w) => self.check(check, false, w.into()),
        }
    }

    pub fn count(&mut self, name: impl Into<String>, n: usize) {
        self.counts.push((name.into(), n));
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn verdict(&self, check: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.check == check)
    }

    pub fn passed(&self, check: &str) -> bool {
        self.verdict(check).is_some_and(|v| v.pass)
    }

    /// Append another report's verdicts and counts under `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut v in other.verdicts {
            v.check = format!("{prefix}/{}", v.check);
            self.verdicts.push(v);
        }
        for (name, n) in other.counts {
            self.counts.push((format!("{prefix}/{name}"), n));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.command)?;
        for v in &self.verdicts {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            if v.witness.is_empty() {
                writeln!(f, "  {tag} {}", v.check)?;
            } else {
                writeln!(f, "  {tag} {}: {}", v.check, v.witness.join(" "))?;
            }
        }
        for (name, n) in &self.counts {
            writeln!(f, "  {name} = {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_dropped_on_success() {
        let mut r = Report::new("demo");
        r.check("a", true, vec!["ignored".into()]);
        r.check_none("b", Some(vec!["x".to_string()]));
        assert!(!r.all_pass());
        assert!(r.verdict("a").unwrap().witness.is_empty());
        assert_eq!(r.to_string(), "demo\n  PASS a\n  FAIL b: x\n");
    }
}
