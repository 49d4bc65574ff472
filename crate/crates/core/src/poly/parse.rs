//! Text input for polynomials and linear forms.
//!
//! Polynomials are sums of products of coefficients (`3`, `-2/5`) and
//! variables with optional powers: `X[2,0]*Y1^2 + 2*X[1,1]*Y1*Y2`.
//! Linear forms additionally accept comma-separated assignments such as
//! `a[2,0]=1, b1=3` or `x=1, y=-1`.

use std::sync::Arc;

use super::linear_form::LinearForm;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::vars::{Side, VariableSet};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, FieldSpec};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.src))
    }
}

fn parse_number(cur: &mut Cursor, field: FieldSpec) -> Result<FieldElement> {
    let num = cur.take_while(|c| c.is_ascii_digit());
    cur.skip_ws();
    if cur.peek() == Some('/') {
        cur.pos += 1;
        cur.skip_ws();
        let den = cur.take_while(|c| c.is_ascii_digit());
        if den.is_empty() {
            return Err(cur.error("expected denominator"));
        }
        return field.parse_element(&format!("{num}/{den}"));
    }
    field.parse_element(num)
}

fn parse_name<'a>(cur: &mut Cursor<'a>) -> Result<String> {
    let start = cur.pos;
    cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
    if cur.peek() == Some('[') {
        cur.take_while(|c| c != ']');
        if cur.peek() != Some(']') {
            return Err(cur.error("unclosed `[`"));
        }
        cur.pos += 1;
    }
    Ok(cur.src[start..cur.pos].chars().filter(|c| !c.is_whitespace()).collect())
}

/// Parses a polynomial over `vars` on the given side.
pub fn parse_polynomial(text: &str, vars: &Arc<VariableSet>, side: Side, field: FieldSpec) -> Result<Polynomial> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut coeff = field.one();
        match cur.peek() {
            Some('+') => cur.pos += 1,
            Some('-') => {
                cur.pos += 1;
                coeff = -&coeff;
            }
            None if first => return Err(cur.error("empty polynomial")),
            None => break,
            Some(_) if !first => return Err(cur.error("expected `+` or `-`")),
            Some(_) => {}
        }
        first = false;
        let mut exps = vec![0u32; vars.len()];
        loop {
            cur.skip_ws();
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = parse_number(&mut cur, field)?;
                    coeff = &coeff * &n;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = parse_name(&mut cur)?;
                    let idx = vars.index_of(&name).ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    cur.skip_ws();
                    let mut power = 1;
                    if cur.peek() == Some('^') {
                        cur.pos += 1;
                        cur.skip_ws();
                        let digits = cur.take_while(|c| c.is_ascii_digit());
                        power = digits.parse().map_err(|_| cur.error("expected exponent"))?;
                    }
                    exps[idx] += power;
                }
                _ => return Err(cur.error("expected coefficient or variable")),
            }
            cur.skip_ws();
            match cur.peek() {
                Some('*') => cur.pos += 1,
                // juxtaposition is an implicit product
                Some(c) if c.is_ascii_alphanumeric() => {}
                _ => break,
            }
        }
        terms.push((Monomial::new(exps), coeff));
    }
    Polynomial::from_terms(vars, side, field, terms)
}

/// Splits on commas that are not inside brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn assignment_index(key: &str, vars: &VariableSet) -> Result<usize> {
    let key: String = key.chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || Error::Parse(format!("unknown coefficient `{key}`"));
    if vars.x_tuples().is_some() {
        if let Some(rest) = key.strip_prefix('a').filter(|r| r.starts_with('[')) {
            let inner = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(unknown)?;
            let tuple = inner
                .split(',')
                .map(|s| s.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| unknown())?;
            return vars.x_index_of(&tuple).ok_or_else(unknown);
        }
        if let Some(j) = key.strip_prefix('b').and_then(|r| r.parse::<usize>().ok()) {
            let y = vars.y_block();
            if j >= 1 && j <= y.len() {
                return Ok(y.start + j - 1);
            }
            return Err(unknown());
        }
    }
    vars.index_of(&key).ok_or_else(unknown)
}

/// Parses a linear form either as assignments (`a[2,0]=1,b1=3`) or as a
/// degree-one polynomial (`x[2,0] + y1`).
pub fn parse_linear_form(text: &str, vars: &Arc<VariableSet>, field: FieldSpec) -> Result<LinearForm> {
    if !text.contains('=') {
        return LinearForm::from_polynomial(&parse_polynomial(text, vars, Side::Ring, field)?);
    }
    let mut coeffs = vec![field.zero(); vars.len()];
    for part in split_top_level(text) {
        let (key, value) =
            part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
        let idx = assignment_index(key, vars)?;
        coeffs[idx] = field.parse_element(value)?;
    }
    LinearForm::new(vars, field, coeffs)
}
