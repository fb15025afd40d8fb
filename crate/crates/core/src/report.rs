use std::fmt;

/// Outcome of checking one law on one algebra.
///
/// `witness` is `Some` exactly when the law failed; it holds the element
/// indices (in the order the law names its variables) that violate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Vec<usize>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        match witness {
            Some(w) => CheckReport::fail(name, w),
            None => CheckReport::pass(name),
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "PASS {}", self.name),
            Some(w) => write!(f, "FAIL {} witness {}", self.name, format_witness(w)),
        }
    }
}

/// Renders a witness tuple as `(a,b,c)`; the empty tuple is `()`.
pub fn format_witness(w: &[usize]) -> String {
    let inner: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// First failing report of a list, if any.
pub fn first_failure(reports: &[CheckReport]) -> Option<&CheckReport> {
    reports.iter().find(|r| !r.passed)
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
