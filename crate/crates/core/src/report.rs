//! Verifier reports.
//!
//! Every checker returns a [`Report`] listing each axiom family it evaluated
//! and every violated instance together with its residual vector. A report
//! passes iff it and all of its sections carry no violations.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactla::{is_zero_vec, vec_sub, Scalar, Vector};

/// One violated instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    /// 1-based equality within a multi-part axiom (`0` for single equations).
    pub clause: u8,
    /// Basis indices the instance was evaluated at.
    pub indices: Vec<usize>,
    /// `lhs − rhs`, or empty for structural failures.
    pub residual: Vector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checked: Vec<String>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub sections: Vec<Report>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.sections.iter().all(Report::passed)
    }

    /// Registers an axiom family as evaluated.
    pub fn check(&mut self, axiom: &str) {
        if !self.checked.iter().any(|a| a == axiom) {
            self.checked.push(axiom.to_string());
        }
    }

    /// Records a violation if `lhs ≠ rhs`. Returns whether the equation held.
    pub fn expect_eq(
        &mut self,
        axiom: &str,
        clause: u8,
        indices: &[usize],
        lhs: &[Scalar],
        rhs: &[Scalar],
    ) -> bool {
        self.check(axiom);
        let residual = vec_sub(lhs, rhs);
        if is_zero_vec(&residual) {
            return true;
        }
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            clause,
            indices: indices.to_vec(),
            residual,
            message: None,
        });
        false
    }

    /// Records a violation if `v ≠ 0`.
    pub fn expect_zero(&mut self, axiom: &str, clause: u8, indices: &[usize], v: &[Scalar]) -> bool {
        self.check(axiom);
        if is_zero_vec(v) {
            return true;
        }
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            clause,
            indices: indices.to_vec(),
            residual: v.to_vec(),
            message: None,
        });
        false
    }

    /// Records a condition without a residual.
    pub fn expect(&mut self, axiom: &str, ok: bool, message: impl FnOnce() -> String) -> bool {
        self.check(axiom);
        if !ok {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                clause: 0,
                indices: Vec::new(),
                residual: Vec::new(),
                message: Some(message()),
            });
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn push_section(&mut self, section: Report) {
        self.sections.push(section);
    }

    /// All violations, depth first, paired with the subject of their section.
    pub fn all_violations(&self) -> Vec<(&str, &Violation)> {
        let mut out: Vec<(&str, &Violation)> =
            self.violations.iter().map(|v| (self.subject.as_str(), v)).collect();
        for s in &self.sections {
            out.extend(s.all_violations());
        }
        out
    }

    /// Whether some violation (anywhere) carries the given axiom tag.
    pub fn fails(&self, axiom: &str) -> bool {
        self.all_violations().iter().any(|(_, v)| v.axiom == axiom)
    }

    /// Whether the axiom was evaluated here or in a section.
    pub fn has_checked(&self, axiom: &str) -> bool {
        self.checked.iter().any(|a| a == axiom) || self.sections.iter().any(|s| s.has_checked(axiom))
    }

    /// Short one-line description of the first few violations.
    pub fn summary(&self) -> String {
        let all = self.all_violations();
        if all.is_empty() {
            return format!("{}: pass", self.subject);
        }
        let mut parts: Vec<String> = all
            .iter()
            .take(3)
            .map(|(subject, v)| {
                let clause = if v.clause > 0 { format!(".{}", v.clause) } else { String::new() };
                match &v.message {
                    Some(m) => format!("{subject}: {}{clause} {m}", v.axiom),
                    None => format!("{subject}: {}{clause} at {:?}", v.axiom, v.indices),
                }
            })
            .collect();
        if all.len() > 3 {
            parts.push(format!("... {} more", all.len() - 3));
        }
        parts.join("; ")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Report", 6)?;
        st.serialize_field("subject", &self.subject)?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("checked", &self.checked)?;
        st.serialize_field("violations", &self.violations)?;
        st.serialize_field("notes", &self.notes)?;
        st.serialize_field("sections", &self.sections)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_pass_fail() {
        let mut top = Report::new("top");
        assert!(top.passed());
        let mut child = Report::new("child");
        child.expect_eq("Ax", 1, &[0, 1], &[Scalar::one()], &[Scalar::zero()]);
        top.push_section(child);
        assert!(!top.passed());
        assert!(top.fails("Ax"));
        assert!(top.has_checked("Ax"));
        assert!(top.summary().contains("child: Ax.1"));
    }
}
