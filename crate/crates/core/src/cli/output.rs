use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
}

/// JSON (pretty, trailing newline) or `path<TAB>value` lines.
pub fn render<T: Serialize>(record: &T, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("records serialize");
            s.push('\n');
            s
        }
        OutputFormat::Tsv => {
            let value = serde_json::to_value(record).expect("records serialize");
            let mut rows = Vec::new();
            flatten(&value, String::new(), &mut rows);
            let mut out = String::new();
            for (k, v) in rows {
                out.push_str(&k);
                out.push('\t');
                out.push_str(&v);
                out.push('\n');
            }
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn flatten(v: &Value, path: String, rows: &mut Vec<(String, String)>) {
    match v {
        // partitions and degree types collapse to their notation
        Value::Object(map) if map.contains_key("notation") => {
            rows.push((path, scalar(&map["notation"]).unwrap_or_default()));
        }
        Value::Object(map) => {
            for (k, x) in map {
                flatten(x, join(&path, k), rows);
            }
        }
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            rows.push((path, parts.join(",")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, join(&path, &i.to_string()), rows);
            }
        }
        other => rows.push((path, scalar(other).unwrap_or_default())),
    }
}
