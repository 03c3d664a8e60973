//! Diagnostics returned by the validators.

use std::fmt;

/// One violated identity with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(axiom: &'static str, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Violation { axiom, witness, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.axiom, self.witness)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Every violation found; empty means valid.
pub type Diagnostics = Vec<Violation>;
