//! Output formatting. JSON is the source of truth; the aligned table is a
//! human-readable projection of the same data.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

impl Format {
    /// The --format flag wins; otherwise SWFORGE_FORMAT; otherwise json.
    /// A bad env value is a usage error, same as a bad flag.
    pub fn resolve(flag: Option<Format>) -> Result<Format, String> {
        if let Some(f) = flag {
            return Ok(f);
        }
        match std::env::var("SWFORGE_FORMAT") {
            Ok(v) => match v.to_ascii_lowercase().as_str() {
                "json" => Ok(Format::Json),
                "table" => Ok(Format::Table),
                other => Err(format!(
                    "SWFORGE_FORMAT must be `json` or `table`, got `{other}`"
                )),
            },
            Err(_) => Ok(Format::Json),
        }
    }
}

pub enum Table {
    /// One `key  value` row per line, keys padded to a common width.
    KeyVals(Vec<(String, String)>),
    /// Grid with a header row; `# note` lines follow.
    Grid {
        columns: Vec<&'static str>,
        rows: Vec<Vec<String>>,
        notes: Vec<String>,
    },
}

pub fn kv(pairs: &[(&str, String)]) -> Table {
    Table::KeyVals(
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
    )
}

fn grid_line(out: &mut String, cells: &[String], widths: &[usize]) {
    for (i, cell) in cells.iter().enumerate() {
        if i + 1 == cells.len() {
            let _ = writeln!(out, "{cell}");
        } else {
            let _ = write!(out, "{cell:<w$}  ", w = widths[i]);
        }
    }
    if cells.is_empty() {
        out.push('\n');
    }
}

pub fn render(table: &Table) -> String {
    let mut out = String::new();
    match table {
        Table::KeyVals(pairs) => {
            let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in pairs {
                let _ = writeln!(out, "{k:<w$}  {v}");
            }
        }
        Table::Grid {
            columns,
            rows,
            notes,
        } => {
            let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let header: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
            grid_line(&mut out, &header, &widths);
            for row in rows {
                grid_line(&mut out, row, &widths);
            }
            for note in notes {
                let _ = writeln!(out, "# {note}");
            }
        }
    }
    out
}
