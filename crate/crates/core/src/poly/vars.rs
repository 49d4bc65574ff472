use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which ring a polynomial lives in: the polynomial ring `R` acting by
/// contraction, or the divided-power module `S` it acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Ring,
    Dual,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Ring => "ring",
            Side::Dual => "dual",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VariableKind {
    /// x-block indexed by exponent tuples of length `m` summing to `d - 1`
    /// (descending lexicographic), followed by `y1..ym`.
    Perazzo {
        m: usize,
        d: usize,
        x_tuples: Vec<Vec<u32>>,
    },
    Generic,
}

/// Ordered variables of `R` (lowercase names) and of `S` (uppercase names).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    kind: VariableKind,
    names: Vec<String>,
}

/// All tuples of `len` nonnegative integers summing to `total`, in descending
/// lexicographic order.
pub fn exponent_tuples(len: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(len - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, total, &mut Vec::with_capacity(len), &mut out);
    out
}

fn tuple_label(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

impl VariableSet {
    /// Variables of the full Perazzo ring for `m` y-variables and degree `d`.
    pub fn perazzo(m: usize, d: usize) -> Result<Arc<Self>> {
        if m < 1 || d < 1 {
            return Err(Error::InvalidParams(format!("need m >= 1 and d >= 1, got m={m}, d={d}")));
        }
        let x_tuples = exponent_tuples(m, (d - 1) as u32);
        let mut names: Vec<String> = x_tuples.iter().map(|t| format!("x{}", tuple_label(t))).collect();
        names.extend((1..=m).map(|j| format!("y{j}")));
        Ok(Arc::new(VariableSet { kind: VariableKind::Perazzo { m, d, x_tuples }, names }))
    }

    /// Plain named variables; names are given ring-side and must be distinct
    /// ignoring case.
    pub fn generic<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|n| n.as_ref().trim().to_lowercase()).collect();
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Parse(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(VariableSet { kind: VariableKind::Generic, names }))
    }

    pub fn kind(&self) -> &VariableKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize, side: Side) -> String {
        match side {
            Side::Ring => self.names[index].clone(),
            Side::Dual => self.names[index].to_uppercase(),
        }
    }

    /// Index of a variable given by its ring or dual name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        let lower = name.trim().to_lowercase().replace(' ', "");
        self.names.iter().position(|n| *n == lower)
    }

    /// x-block positions; everything for generic sets.
    pub fn x_block(&self) -> Range<usize> {
        match &self.kind {
            VariableKind::Perazzo { x_tuples, .. } => 0..x_tuples.len(),
            VariableKind::Generic => 0..self.names.len(),
        }
    }

    /// y-block positions; empty for generic sets.
    pub fn y_block(&self) -> Range<usize> {
        match &self.kind {
            VariableKind::Perazzo { x_tuples, .. } => x_tuples.len()..self.names.len(),
            VariableKind::Generic => self.names.len()..self.names.len(),
        }
    }

    pub fn x_tuples(&self) -> Option<&[Vec<u32>]> {
        match &self.kind {
            VariableKind::Perazzo { x_tuples, .. } => Some(x_tuples),
            VariableKind::Generic => None,
        }
    }

    pub fn x_index_of(&self, tuple: &[u32]) -> Option<usize> {
        self.x_tuples()?.iter().position(|t| t == tuple)
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
