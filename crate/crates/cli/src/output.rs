use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    #[default]
    Tsv,
    Json,
}

/// What a subcommand produced, independent of how it is printed.
pub enum Output {
    /// A single answer, printed bare.
    Value { field: &'static str, value: String },
    /// One item per line.
    List { field: &'static str, items: Vec<String> },
    /// Rows under named columns. `tsv_header` is off for formats that are
    /// read back as input files (vectors).
    Table {
        headers: Vec<&'static str>,
        rows: Vec<Vec<String>>,
        tsv_header: bool,
    },
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::Value { value, .. }, Format::Tsv | Format::Table) => format!("{value}\n"),
            (Output::Value { field, value }, Format::Json) => {
                let mut obj = Map::new();
                obj.insert((*field).into(), Value::String(value.clone()));
                format!("{}\n", Value::Object(obj))
            }
            (Output::List { items, .. }, Format::Tsv | Format::Table) => {
                items.iter().map(|i| format!("{i}\n")).collect()
            }
            (Output::List { field, items }, Format::Json) => {
                let mut obj = Map::new();
                obj.insert(
                    (*field).into(),
                    Value::Array(items.iter().cloned().map(Value::String).collect()),
                );
                format!("{}\n", Value::Object(obj))
            }
            (
                Output::Table {
                    headers,
                    rows,
                    tsv_header,
                },
                Format::Tsv,
            ) => {
                let mut out = String::new();
                if *tsv_header {
                    out.push_str(&headers.join("\t"));
                    out.push('\n');
                }
                for r in rows {
                    out.push_str(&r.join("\t"));
                    out.push('\n');
                }
                out
            }
            (Output::Table { headers, rows, .. }, Format::Table) => aligned(headers, rows),
            (Output::Table { headers, rows, .. }, Format::Json) => {
                let arr: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> = headers
                            .iter()
                            .zip(r)
                            .map(|(h, v)| ((*h).to_string(), Value::String(v.clone())))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                format!("{}\n", Value::Array(arr))
            }
        }
    }
}

fn aligned(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_each_format() {
        let v = Output::Value {
            field: "product",
            value: "x0 x2".into(),
        };
        assert_eq!(v.render(Format::Tsv), "x0 x2\n");
        assert_eq!(v.render(Format::Json), "{\"product\":\"x0 x2\"}\n");
        let t = Output::Table {
            headers: vec!["n", "ratio"],
            rows: vec![vec!["2".into(), "1/2".into()], vec!["10".into(), "9/10".into()]],
            tsv_header: true,
        };
        assert_eq!(t.render(Format::Tsv), "n\tratio\n2\t1/2\n10\t9/10\n");
        assert_eq!(t.render(Format::Table), "n   ratio\n2   1/2\n10  9/10\n");
        assert_eq!(
            t.render(Format::Json),
            "[{\"n\":\"2\",\"ratio\":\"1/2\"},{\"n\":\"10\",\"ratio\":\"9/10\"}]\n"
        );
    }
}
