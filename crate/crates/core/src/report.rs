//! Pass/fail reports produced by the verification routines.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Claim {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    /// A sub-check that does not apply; counts as passing.
    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        Claim::new(name, true, format!("skipped: {}", why.into()))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.push(Claim::new(name, pass, detail));
    }

    pub fn extend(&mut self, other: Report) {
        self.claims.extend(other.claims);
    }

    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.claims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.claims.is_empty()
    }

    /// Stable sort by claim name.
    pub fn sort(&mut self) {
        self.claims.sort_by(|a, b| a.name.cmp(&b.name));
    }
}

impl FromIterator<Claim> for Report {
    fn from_iter<I: IntoIterator<Item = Claim>>(iter: I) -> Self {
        Report {
            claims: iter.into_iter().collect(),
        }
    }
}
