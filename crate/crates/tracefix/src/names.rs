//! Ordered name lists for states, variables, and parameters.
//!
//! Declaration order is preserved and used as the canonical iteration
//! order everywhere names are printed. Names are whitespace-free tokens
//! (ASCII alphanumerics plus `_`, `-`, `.`) so the line-based file formats
//! and the CLI's `--pairs` syntax can never be ambiguous.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NameError {
    #[error("invalid name {0:?}: names are nonempty ASCII alphanumerics plus '_', '-', '.'")]
    Invalid(String),
    #[error("duplicate name {0:?}")]
    Duplicate(String),
}

pub fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

/// An ordered, duplicate-free list of names.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Names {
    names: Vec<String>,
}

impl Names {
    pub fn new(names: Vec<String>) -> Result<Self, NameError> {
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(NameError::Invalid(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(NameError::Duplicate(n.clone()));
            }
        }
        Ok(Names { names })
    }

    pub fn empty() -> Self {
        Names::default()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }
}
