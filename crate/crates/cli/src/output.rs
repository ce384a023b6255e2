use std::fs;
use std::io::{self, Write};

use serde_json::Value;

use crate::commands::Output;
use crate::{Failure, Format, RunConfig};

/// Writes `out` to stdout in the configured format and applies the
/// fixture comparison.
pub fn emit(out: &Output, cfg: &RunConfig) -> Result<(), Failure> {
    let text = match cfg.format {
        Format::Json => json(&out.value),
        Format::Csv => csv(out),
        Format::Text => text(&out.value, ""),
    };
    let mut stdout = io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
    if let Some(path) = &cfg.fixtures {
        if path.exists() {
            let stored = fs::read_to_string(path)
                .map_err(|e| Failure::Fixture(format!("{}: {e}", path.display())))?;
            let stored: Value = serde_json::from_str(&stored)
                .map_err(|e| Failure::Fixture(format!("{}: {e}", path.display())))?;
            if stored != out.value {
                return Err(Failure::Fixture(format!(
                    "output differs from {}",
                    path.display()
                )));
            }
        } else {
            fs::write(path, json(&out.value))
                .map_err(|e| Failure::Fixture(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}

fn json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// The command's table when it has one, otherwise `key,value` rows.
fn csv(out: &Output) -> String {
    let (header, rows): (Vec<String>, Vec<Vec<String>>) = match &out.table {
        Some(t) => (
            t.header.iter().map(|h| h.to_string()).collect(),
            t.rows.clone(),
        ),
        None => {
            let rows = match &out.value {
                Value::Object(map) => map
                    .iter()
                    .map(|(k, v)| vec![k.clone(), scalar(v)])
                    .collect(),
                other => vec![vec!["value".to_string(), scalar(other)]],
            };
            (vec!["key".into(), "value".into()], rows)
        }
    };
    let mut s = String::new();
    for row in std::iter::once(&header).chain(rows.iter()) {
        let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}

fn text(value: &Value, indent: &str) -> String {
    let mut s = String::new();
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        s.push_str(&format!("{indent}{k}:\n"));
                        s.push_str(&text(v, &format!("{indent}  ")));
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        s.push_str(&format!("{indent}{k}:\n"));
                        for item in items {
                            s.push_str(&format!("{indent}  -\n"));
                            s.push_str(&text(item, &format!("{indent}    ")));
                        }
                    }
                    _ => s.push_str(&format!("{indent}{k}: {}\n", scalar(v))),
                }
            }
        }
        other => s.push_str(&format!("{indent}{}\n", scalar(other))),
    }
    s
}
