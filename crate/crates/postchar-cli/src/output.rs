//! Rendering of JSON reports as pretty JSON, aligned tables, or TSV.
//! Output is deterministic: key order follows struct declaration order.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Tsv,
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => render_table(value),
        Format::Tsv => render_tsv(value),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => serde_json::to_string(other).expect("scalar serializes"),
    }
}

/// Flattens nested objects into dotted keys; arrays of objects are kept
/// whole and rendered as sub-tables.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, Value)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        other => out.push((prefix.to_string(), other.clone())),
    }
}

fn is_object_array(value: &Value) -> bool {
    matches!(value, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

fn columns_of(items: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for item in items {
        if let Value::Object(map) = item {
            for k in map.keys() {
                if !cols.iter().any(|c| c == k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    cols
}

fn cell(item: &Value, col: &str) -> String {
    item.get(col).map(scalar).unwrap_or_else(|| "-".into())
}

fn render_rows(items: &[Value]) -> String {
    let cols = columns_of(items);
    let mut widths: Vec<usize> = cols.iter().map(|c| c.len()).collect();
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|item| cols.iter().map(|c| cell(item, c)).collect())
        .collect();
    for row in &rows {
        for (i, v) in row.iter().enumerate() {
            widths[i] = widths[i].max(v.len());
        }
    }
    let mut out = String::new();
    for (i, c) in cols.iter().enumerate() {
        out.push_str(&format!("{:<width$}  ", c, width = widths[i]));
    }
    out.push('\n');
    for row in &rows {
        for (i, v) in row.iter().enumerate() {
            out.push_str(&format!("{:<width$}  ", v, width = widths[i]));
        }
        out.push('\n');
    }
    out
}

fn render_table(value: &Value) -> String {
    match value {
        Value::Object(_) => {
            let mut pairs = Vec::new();
            flatten("", value, &mut pairs);
            // Arrays of objects render as indented sub-tables after the
            // scalar fields.
            let (tables, scalars): (Vec<_>, Vec<_>) =
                pairs.into_iter().partition(|(_, v)| is_object_array(v));
            let width = scalars.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in &scalars {
                out.push_str(&format!("{:<width$}  {}\n", k, scalar(v), width = width));
            }
            for (k, v) in &tables {
                if let Value::Array(items) = v {
                    out.push_str(&format!("{k}:\n"));
                    for line in render_rows(items).lines() {
                        out.push_str(&format!("  {line}\n"));
                    }
                }
            }
            out
        }
        Value::Array(items) if is_object_array(value) => render_rows(items),
        Value::Array(items) => items.iter().map(|v| scalar(v) + "\n").collect(),
        other => scalar(other) + "\n",
    }
}

fn render_tsv(value: &Value) -> String {
    match value {
        Value::Array(items) if is_object_array(value) => {
            let cols = columns_of(items);
            let mut out = cols.join("\t");
            out.push('\n');
            for item in items {
                let row: Vec<String> = cols.iter().map(|c| cell(item, c)).collect();
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
            out
        }
        Value::Array(items) => items.iter().map(|v| scalar(v) + "\n").collect(),
        Value::Object(_) => {
            let mut pairs = Vec::new();
            flatten("", value, &mut pairs);
            let mut out = String::new();
            for (k, v) in pairs {
                if is_object_array(&v) {
                    if let Value::Array(items) = &v {
                        for item in items {
                            let mut fields = Vec::new();
                            flatten(&k, item, &mut fields);
                            let row: Vec<String> =
                                fields.iter().map(|(_, v)| scalar(v)).collect();
                            out.push_str(&row.join("\t"));
                            out.push('\n');
                        }
                    }
                } else {
                    out.push_str(&format!("{k}\t{}\n", scalar(&v)));
                }
            }
            out
        }
        other => scalar(other) + "\n",
    }
}
