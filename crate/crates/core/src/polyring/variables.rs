use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// An ordered list of variable names together with the lex precedence.
///
/// Variables are addressed by their declaration index. The precedence is a
/// separate total order: the lex comparison looks at the most significant
/// variable first.
#[derive(Clone, PartialEq, Eq)]
pub struct VariableSet {
    names: Vec<String>,
    /// Declaration indices, most significant first.
    significance: Vec<usize>,
    index: HashMap<String, usize>,
}

pub(crate) fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableSet {
    /// Variables whose precedence follows declaration order, so the last
    /// declared variable is the most significant one.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let ascending: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
        Self::with_precedence(names, &ascending)
    }

    /// `ascending` lists every name once, from least to most significant.
    pub fn with_precedence<S: AsRef<str>, T: AsRef<str>>(
        names: &[S],
        ascending: &[T],
    ) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(Error::InvalidVariableName(n.to_string()));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
            owned.push(n.to_string());
        }
        if ascending.len() != names.len() {
            return Err(Error::BadPrecedence);
        }
        let mut seen = vec![false; names.len()];
        let mut significance = Vec::with_capacity(names.len());
        for n in ascending.iter().rev() {
            let i = *index.get(n.as_ref()).ok_or(Error::BadPrecedence)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::BadPrecedence);
            }
            significance.push(i);
        }
        Ok(Arc::new(Self {
            names: owned,
            significance,
            index,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Names from least to most significant.
    pub fn precedence(&self) -> Vec<&str> {
        self.significance
            .iter()
            .rev()
            .map(|&i| self.names[i].as_str())
            .collect()
    }

    /// Lex comparison of two exponent vectors under this precedence.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        for &i in &self.significance {
            match ea[i].cmp(&eb[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// A new set with `name` appended as the least significant variable.
    pub fn adjoin(&self, name: &str) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let mut ascending = vec![name.to_string()];
        ascending.extend(self.precedence().into_iter().map(str::to_string));
        Self::with_precedence(&names, &ascending)
    }

    /// True when `other` starts with exactly these names, in order.
    pub fn is_prefix_of(&self, other: &VariableSet) -> bool {
        other.names.len() >= self.names.len() && other.names[..self.names.len()] == self.names[..]
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VariableSet[{}]", self.precedence().join(" < "))
    }
}

pub(crate) fn same_ring(a: &Arc<VariableSet>, b: &Arc<VariableSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
