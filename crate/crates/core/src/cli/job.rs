use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize};

use crate::apolar::GradedAlgebraModel;
use crate::error::{Error, Result};
use crate::jordan::Partition;
use crate::linalg::FieldSpec;
use crate::perazzo::{full_perazzo_form, PerazzoParams, VerifyMode};
use crate::poly::{parse_linear_form, parse_polynomial, LinearForm, Polynomial, Side, VariableSet};

/// Which per-sample records `verify` prints. The summary is always complete.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Detail {
    Full,
    /// Mismatches and forms outside the literal hypotheses.
    #[default]
    Flagged,
    Summary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualSource {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub generator: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSource {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

/// Everything a subcommand needs, read from a TOML document and/or flags.
///
/// ```toml
/// field = "gfp:7"
/// perazzo = { m = 2, d = 3 }
/// ell = { "a[2,0]" = 1, b1 = "1/2" }
/// ```
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perazzo: Option<PerazzoParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealSource>,
    #[serde(default, deserialize_with = "de_ell", skip_serializing_if = "Option::is_none")]
    pub ell: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<VerifyMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Detail>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EllRepr {
    Text(String),
    Table(BTreeMap<String, Scalar>),
}

/// A linear form is either text (`"x[2,0] + y1"`, `"b1=1"`) or a table of
/// coefficients; tables are normalized to `key=value` assignments.
fn de_ell<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<String>, D::Error> {
    Ok(Option::<EllRepr>::deserialize(d)?.map(|e| match e {
        EllRepr::Text(t) => t,
        EllRepr::Table(t) => t
            .into_iter()
            .map(|(k, v)| match v {
                Scalar::Int(i) => format!("{k}={i}"),
                Scalar::Text(s) => format!("{k}={s}"),
            })
            .collect::<Vec<_>>()
            .join(","),
    }))
}

/// An error tied to the input field that caused it.
#[derive(Debug)]
pub struct InputError {
    pub field: &'static str,
    pub error: Error,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.error)
    }
}

pub(crate) trait Context<T> {
    fn field(self, name: &'static str) -> std::result::Result<T, InputError>;
}

impl<T> Context<T> for Result<T> {
    fn field(self, name: &'static str) -> std::result::Result<T, InputError> {
        self.map_err(|error| InputError { field: name, error })
    }
}

pub(crate) fn missing(name: &'static str, what: &str) -> InputError {
    InputError { field: name, error: Error::InvalidParams(format!("{what} is required")) }
}

/// Variable names in order of first appearance.
fn infer_vars(texts: &[&str]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_ascii_digit() {
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
            } else if chars[i].is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect::<String>().to_lowercase();
                if !names.contains(&name) {
                    names.push(name);
                }
            } else {
                i += 1;
            }
        }
    }
    names
}

/// Splits at commas and semicolons outside brackets.
pub(crate) fn split_generators(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if (c == ',' || c == ';') && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

#[derive(Debug, Clone)]
pub enum Source {
    Perazzo(PerazzoParams),
    Dual(Polynomial),
    Ideal { generators: Vec<Polynomial>, bound: usize },
}

impl JobSpec {
    pub fn load(path: &Path) -> std::result::Result<JobSpec, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
            .field("--spec")?;
        toml::from_str(&text).map_err(|e| Error::Parse(e.to_string())).field("--spec")
    }

    pub fn field_or_default(&self) -> FieldSpec {
        self.field.unwrap_or_default()
    }

    pub fn source(&self) -> std::result::Result<Source, InputError> {
        let present = [self.perazzo.is_some(), self.dual.is_some(), self.ideal.is_some()];
        match present.iter().filter(|&&p| p).count() {
            0 => return Err(missing("source", "one of --perazzo, --dual or --ideal")),
            1 => {}
            _ => {
                return Err(InputError {
                    field: "source",
                    error: Error::InvalidParams("give exactly one of --perazzo, --dual or --ideal".into()),
                })
            }
        }
        let field = self.field_or_default();
        if let Some(p) = self.perazzo {
            return Ok(Source::Perazzo(p));
        }
        if let Some(dual) = &self.dual {
            let names = dual.vars.clone().unwrap_or_else(|| infer_vars(&[&dual.generator]));
            let vars = VariableSet::generic(&names).field("vars")?;
            let f = parse_polynomial(&dual.generator, &vars, Side::Dual, field).field("--dual")?;
            return Ok(Source::Dual(f));
        }
        let ideal = self.ideal.as_ref().unwrap();
        let texts: Vec<&str> = ideal.generators.iter().map(String::as_str).collect();
        let names = ideal.vars.clone().unwrap_or_else(|| infer_vars(&texts));
        let vars = VariableSet::generic(&names).field("vars")?;
        let generators = ideal
            .generators
            .iter()
            .map(|g| parse_polynomial(g, &vars, Side::Ring, field))
            .collect::<Result<Vec<_>>>()
            .field("--ideal")?;
        let bound = match ideal.bound {
            Some(b) => b,
            None => {
                let mut b = 1;
                for g in &generators {
                    b += g.homogeneous_degree().field("--ideal")?.unwrap_or(1).saturating_sub(1);
                }
                b
            }
        };
        Ok(Source::Ideal { generators, bound })
    }
}

impl Source {
    pub fn vars(&self) -> Arc<VariableSet> {
        match self {
            Source::Perazzo(p) => p.vars(),
            Source::Dual(f) => f.vars().clone(),
            Source::Ideal { generators, .. } => generators[0].vars().clone(),
        }
    }

    pub fn model(&self, field: FieldSpec) -> std::result::Result<GradedAlgebraModel, InputError> {
        match self {
            Source::Perazzo(p) => GradedAlgebraModel::from_dual(&full_perazzo_form(p, field)).field("--perazzo"),
            Source::Dual(f) => GradedAlgebraModel::from_dual(f).field("--dual"),
            Source::Ideal { generators, bound } => GradedAlgebraModel::from_ideal(generators, *bound).field("--ideal"),
        }
    }

    pub fn dual_generator(&self, field: FieldSpec) -> Option<Polynomial> {
        match self {
            Source::Perazzo(p) => Some(full_perazzo_form(p, field)),
            Source::Dual(f) => Some(f.clone()),
            Source::Ideal { .. } => None,
        }
    }

    pub fn linear_form(&self, job: &JobSpec) -> std::result::Result<LinearForm, InputError> {
        let text = job.ell.as_deref().ok_or_else(|| missing("--ell", "a linear form"))?;
        parse_linear_form(text, &self.vars(), job.field_or_default()).field("--ell")
    }
}
