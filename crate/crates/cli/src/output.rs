//! Deterministic tabular output: CSV with a single header row, or JSON
//! lines with the same column names. Floats print in scientific notation
//! at a fixed number of significant digits (17 by default, enough to
//! round-trip a double), so identical invocations produce identical bytes.

use std::io::{self, Write};

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Str(&'static str),
    /// Missing value: empty CSV field, JSON null.
    Empty,
}

pub fn fmt_float(x: f64, precision: usize) -> String {
    format!("{:.*e}", precision.saturating_sub(1), x)
}

pub struct Table<W: Write> {
    out: W,
    headers: &'static [&'static str],
    json: bool,
    precision: usize,
}

impl<W: Write> Table<W> {
    pub fn new(
        mut out: W,
        headers: &'static [&'static str],
        json: bool,
        precision: usize,
    ) -> io::Result<Self> {
        if !json {
            writeln!(out, "{}", headers.join(","))?;
        }
        Ok(Table {
            out,
            headers,
            json,
            precision,
        })
    }

    fn render(&self, cell: &Cell) -> String {
        match cell {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => fmt_float(*x, self.precision),
            Cell::Str(s) => {
                if self.json {
                    format!("\"{s}\"")
                } else {
                    s.to_string()
                }
            }
            Cell::Empty => {
                if self.json {
                    "null".to_string()
                } else {
                    String::new()
                }
            }
        }
    }

    pub fn row(&mut self, cells: &[Cell]) -> io::Result<()> {
        debug_assert_eq!(cells.len(), self.headers.len());
        if self.json {
            let fields: Vec<String> = self
                .headers
                .iter()
                .zip(cells)
                .map(|(h, c)| format!("\"{h}\":{}", self.render(c)))
                .collect();
            writeln!(self.out, "{{{}}}", fields.join(","))
        } else {
            let fields: Vec<String> = cells.iter().map(|c| self.render(c)).collect();
            writeln!(self.out, "{}", fields.join(","))
        }
    }

    /// In-band warning line: `# ...` in CSV, a {"warning": ...} object in
    /// JSON mode.
    pub fn warning(&mut self, text: &str) -> io::Result<()> {
        if self.json {
            writeln!(self.out, "{{\"warning\":\"{text}\"}}")
        } else {
            writeln!(self.out, "# {text}")
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}
