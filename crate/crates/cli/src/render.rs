//! Plain-text rendering of JSON reports.

use serde_json::Value;

/// The canonical text of a value that carries one.
fn text_of(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(o) => o.get("text").and_then(Value::as_str).map(str::to_string),
        Value::Array(_) => None,
    }
}

/// Arrays of scalars print inline.
fn inline(v: &Value) -> Option<String> {
    if let Some(t) = text_of(v) {
        return Some(t);
    }
    let items = v.as_array()?;
    let parts: Option<Vec<String>> = items
        .iter()
        .map(|x| if x.is_array() { None } else { text_of(x) })
        .collect();
    let parts = parts?;
    let joined = format!("[{}]", parts.join(", "));
    (joined.len() <= 100).then_some(joined)
}

/// Arrays of arrays of scalars print as aligned tables.
fn as_table(v: &Value) -> Option<Vec<Vec<String>>> {
    let rows = v.as_array()?;
    if rows.is_empty() {
        return None;
    }
    rows.iter()
        .map(|r| r.as_array()?.iter().map(text_of).collect::<Option<Vec<_>>>())
        .collect()
}

fn write_table(out: &mut String, indent: &str, labels: Option<&[String]>, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; cols];
    for r in rows {
        for (j, c) in r.iter().enumerate() {
            widths[j] = widths[j].max(c.chars().count());
        }
    }
    let label_width = labels.map_or(0, |l| l.iter().map(|s| s.chars().count()).max().unwrap_or(0));
    for (i, r) in rows.iter().enumerate() {
        out.push_str(indent);
        if let Some(l) = labels {
            let label = l.get(i).map(String::as_str).unwrap_or("");
            out.push_str(&format!("{label:<label_width$} | "));
        }
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c:<w$}", w = widths[j]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
}

fn write_value(out: &mut String, depth: usize, v: &Value) {
    let indent = "  ".repeat(depth);
    match v {
        Value::Object(o) if text_of(v).is_none() => {
            let labels: Option<Vec<String>> = o
                .get("row_labels")
                .and_then(|l| l.as_array()?.iter().map(|x| x.as_str().map(str::to_string)).collect());
            for (k, x) in o {
                if k == "row_labels" && labels.is_some() {
                    continue;
                }
                if let Some(t) = inline(x) {
                    out.push_str(&format!("{indent}{k}: {t}\n"));
                } else if let Some(rows) = as_table(x) {
                    out.push_str(&format!("{indent}{k}:\n"));
                    let l = labels.as_deref().filter(|l| l.len() == rows.len());
                    write_table(out, &"  ".repeat(depth + 1), l, &rows);
                } else {
                    out.push_str(&format!("{indent}{k}:\n"));
                    write_value(out, depth + 1, x);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if let Some(t) = inline(x) {
                    out.push_str(&format!("{indent}- {t}\n"));
                } else {
                    out.push_str(&format!("{indent}-\n"));
                    write_value(out, depth + 1, x);
                }
            }
        }
        _ => {
            out.push_str(&format!("{indent}{}\n", text_of(v).unwrap_or_default()));
        }
    }
}

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, 0, v);
    out
}
