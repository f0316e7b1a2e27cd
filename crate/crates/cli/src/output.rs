//! Deterministic numeric formatting and the table/CSV/JSON writers.
//!
//! All numeric output follows one contract: 15 significant digits, '.'
//! decimal separator, trailing zeros trimmed, scientific notation only
//! outside [1e-4, 1e15). Parsing such a string back to f64 and reformatting
//! reproduces it byte-for-byte, which is what makes emitted files canonical.

use std::fmt::Write as _;

/// Output format selector shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// C-style `%.15g`: 15 significant digits, fixed or scientific by exponent.
pub fn fmt_g15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.14e}", x);
    let epos = sci.find('e').expect("exponent marker");
    let exp: i32 = sci[epos + 1..].parse().expect("exponent digits");
    let neg = sci.starts_with('-');
    let digits: String = sci[..epos].chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 15);

    let body = if (-4..15).contains(&exp) {
        if exp >= 0 {
            let k = exp as usize + 1;
            let frac = digits[k..].trim_end_matches('0');
            if frac.is_empty() {
                digits[..k].to_string()
            } else {
                format!("{}.{}", &digits[..k], frac)
            }
        } else {
            let digits = digits.trim_end_matches('0');
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        }
    } else {
        let tail = digits[1..].trim_end_matches('0');
        let mantissa = if tail.is_empty() {
            digits[..1].to_string()
        } else {
            format!("{}.{}", &digits[..1], tail)
        };
        format!("{mantissa}e{exp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// One output cell: either a preformatted string or a number under the
/// 15-digit contract.
#[derive(Debug, Clone)]
pub enum Cell {
    Str(String),
    Num(f64),
    Int(u64),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Num(x) => fmt_g15(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn render_json(&self) -> String {
        match self {
            Cell::Str(s) => json_string(s),
            Cell::Num(x) => fmt_g15(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// A rectangular result set with named columns, rendered to any [`Format`].
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
            Format::Table => self.render_aligned(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n  {");
            for (j, (name, cell)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "{}: {}", json_string(name), cell.render_json());
            }
            out.push('}');
        }
        out.push_str("\n]\n");
        out
    }

    fn render_aligned(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::render).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &rendered {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let last = self.columns.len().saturating_sub(1);
        let mut out = String::new();
        for (i, col) in self.columns.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            if i == last {
                out.push_str(col);
            } else {
                let _ = write!(out, "{:<width$}", col, width = widths[i]);
            }
        }
        out.push('\n');
        for row in &rendered {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                if i == last {
                    out.push_str(cell);
                } else {
                    let _ = write!(out, "{:<width$}", cell, width = widths[i]);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// A single record rendered as aligned `key = value` lines (table), a
/// one-row CSV, or a JSON object.
pub struct Record {
    pub fields: Vec<(&'static str, Cell)>,
}

impl Record {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in &self.fields {
                    let _ = writeln!(out, "{:<width$} = {}", k, v.render(), width = width);
                }
                out
            }
            Format::Csv => {
                let header: Vec<&str> = self.fields.iter().map(|(k, _)| *k).collect();
                let row: Vec<String> = self.fields.iter().map(|(_, v)| v.render()).collect();
                format!("{}\n{}\n", header.join(","), row.join(","))
            }
            Format::Json => {
                let mut out = String::from("{");
                for (j, (k, v)) in self.fields.iter().enumerate() {
                    if j > 0 {
                        out.push_str(", ");
                    }
                    let _ = write!(out, "{}: {}", json_string(k), v.render_json());
                }
                out.push_str("}\n");
                out
            }
        }
    }
}
