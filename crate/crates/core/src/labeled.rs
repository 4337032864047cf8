//! Decomposition matrices with partition labels on rows and columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `p = 0` for the rationals; `ext` is the degree over the prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldTag {
    pub p: usize,
    pub ext: usize,
}

impl FieldTag {
    pub fn rationals() -> Self {
        FieldTag { p: 0, ext: 1 }
    }

    pub fn prime(p: usize) -> Self {
        FieldTag { p, ext: 1 }
    }
}

/// Entry `(μ, λ)` is the multiplicity `[Δ_μ : L_λ]` (or `[S^μ : D^λ]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub n: usize,
    pub field: FieldTag,
    pub delta: String,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u32>>,
}

impl LabeledMatrix {
    pub fn zeros(n: usize, field: FieldTag, delta: impl Into<String>, rows: Vec<Partition>, cols: Vec<Partition>) -> Self {
        let entries = vec![vec![0; cols.len()]; rows.len()];
        LabeledMatrix { n, field, delta: delta.into(), rows, cols, entries }
    }

    /// Ones at `(λ, λ)` for every label present on both sides.
    pub fn unit_diagonal(n: usize, field: FieldTag, delta: impl Into<String>, rows: Vec<Partition>, cols: Vec<Partition>) -> Self {
        let mut m = LabeledMatrix::zeros(n, field, delta, rows, cols);
        for i in 0..m.rows.len() {
            if let Some(j) = m.col_index(&m.rows[i]) {
                m.entries[i][j] = 1;
            }
        }
        m
    }

    pub fn row_index(&self, label: &Partition) -> Option<usize> {
        self.rows.iter().position(|x| x == label)
    }

    pub fn col_index(&self, label: &Partition) -> Option<usize> {
        self.cols.iter().position(|x| x == label)
    }

    /// Entry by labels; `None` if either label is absent.
    pub fn get(&self, row: &Partition, col: &Partition) -> Option<u32> {
        Some(self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    pub fn set(&mut self, row: &Partition, col: &Partition, value: u32) -> Result<()> {
        let i = self.row_index(row).ok_or_else(|| Error::Parse(format!("no row {row}")))?;
        let j = self.col_index(col).ok_or_else(|| Error::Parse(format!("no column {col}")))?;
        self.entries[i][j] = value;
        Ok(())
    }

    /// Nonzero columns of a row.
    pub fn row_support(&self, row: &Partition) -> Vec<(Partition, u32)> {
        let Some(i) = self.row_index(row) else { return Vec::new() };
        self.cols
            .iter()
            .zip(&self.entries[i])
            .filter(|(_, &v)| v != 0)
            .map(|(c, &v)| (c.clone(), v))
            .collect()
    }

    /// Matrix product; the columns of `self` must be the rows of `other`.
    pub fn mul(&self, other: &LabeledMatrix) -> Result<LabeledMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols.len(), other.rows.len()));
        }
        let mut out = LabeledMatrix::zeros(self.n, other.field, other.delta.clone(), self.rows.clone(), other.cols.clone());
        for (i, row) in self.entries.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.entries[k].iter().enumerate() {
                    out.entries[i][j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Human-readable differences in labels or entries; empty when the
    /// matrices agree.
    pub fn diff(&self, other: &LabeledMatrix) -> Vec<String> {
        let mut out = Vec::new();
        if self.rows != other.rows {
            out.push(format!("rows differ: {:?} vs {:?}", self.rows, other.rows));
        }
        if self.cols != other.cols {
            out.push(format!("columns differ: {:?} vs {:?}", self.cols, other.cols));
        }
        if !out.is_empty() {
            return out;
        }
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in self.cols.iter().enumerate() {
                let (a, b) = (self.entries[i][j], other.entries[i][j]);
                if a != b {
                    out.push(format!("[{r:?} : {c:?}] {a} vs {b}"));
                }
            }
        }
        out
    }

    /// Unitriangularity: a nonzero `(μ, λ)` entry needs `μ = λ`, `|λ| > |μ|`,
    /// or equal sizes with `λ` dominating `μ`; diagonal entries are 1.
    pub fn check_shape(&self) -> std::result::Result<(), String> {
        for (i, mu) in self.rows.iter().enumerate() {
            for (j, lam) in self.cols.iter().enumerate() {
                let v = self.entries[i][j];
                if mu == lam && v != 1 {
                    return Err(format!("diagonal entry at {mu:?} is {v}"));
                }
                if v != 0 && mu != lam && !mu.dominance_leq(lam) {
                    return Err(format!("entry [{mu:?} : {lam:?}] = {v} breaks the cellular order"));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let m: LabeledMatrix = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if m.entries.len() != m.rows.len() || m.entries.iter().any(|r| r.len() != m.cols.len()) {
            return Err(Error::Parse("entries do not match the labels".into()));
        }
        Ok(m)
    }

    /// CSV with a header of column labels; the first column holds row labels.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.cols.iter().map(|c| c.to_string()));
        w.write_record(&header).expect("in-memory write");
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let mut rec = vec![r.to_string()];
            rec.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn from_csv(n: usize, field: FieldTag, delta: &str, s: &str) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(s.as_bytes());
        let perr = |e: csv::Error| Error::Parse(e.to_string());
        let cols = r
            .headers()
            .map_err(perr)?
            .iter()
            .skip(1)
            .map(|x| x.parse())
            .collect::<Result<Vec<Partition>>>()?;
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(perr)?;
            rows.push(rec.get(0).unwrap_or("").parse()?);
            let vals = rec
                .iter()
                .skip(1)
                .map(|x| x.parse::<u32>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<Vec<u32>>>()?;
            entries.push(vals);
        }
        Ok(LabeledMatrix { n, field, delta: delta.to_string(), rows, cols, entries })
    }
}

fn label(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        format!("({p})")
    }
}

/// Bordered table, row labels down the left and column labels across the top.
impl fmt::Display for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_labels: Vec<String> = self.rows.iter().map(label).collect();
        let col_labels: Vec<String> = self.cols.iter().map(label).collect();
        let lw = row_labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = col_labels.iter().map(|s| s.chars().count().max(1)).collect();
        let pad = |s: &str, w: usize| format!("{}{}", " ".repeat(w.saturating_sub(s.chars().count())), s);
        let mut header = format!("{} |", " ".repeat(lw));
        for (c, &w) in col_labels.iter().zip(&widths) {
            header.push(' ');
            header.push_str(&pad(c, w));
        }
        writeln!(f, "{header}")?;
        writeln!(f, "{}+{}", "-".repeat(lw + 1), "-".repeat(header.chars().count() - lw - 2))?;
        for (r, row) in row_labels.iter().zip(&self.entries) {
            let mut line = format!("{} |", pad(r, lw));
            for (v, &w) in row.iter().zip(&widths) {
                let cell = if *v == 0 { ".".to_string() } else { v.to_string() };
                line.push(' ');
                line.push_str(&pad(&cell, w));
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(xs: &[&str]) -> Vec<Partition> {
        xs.iter().map(|x| x.parse().unwrap()).collect()
    }

    fn sample() -> LabeledMatrix {
        let mut m = LabeledMatrix::unit_diagonal(3, FieldTag::prime(3), "2", parts(&["-", "1", "3", "1,1,1"]), parts(&["-", "1", "3"]));
        m.set(&"-".parse().unwrap(), &"3".parse().unwrap(), 1).unwrap();
        m
    }

    #[test]
    fn json_round_trip() {
        let m = sample();
        let back = LabeledMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(m, back);
        assert!(m.to_json().contains("\"rows\""));
    }

    #[test]
    fn csv_round_trip() {
        let m = sample();
        let csv = m.to_csv();
        assert!(csv.starts_with(",-,1,3\n"));
        assert_eq!(LabeledMatrix::from_csv(3, m.field, "2", &csv).unwrap(), m);
    }

    #[test]
    fn shape_and_diff() {
        let m = sample();
        assert!(m.check_shape().is_ok());
        let mut bad = m.clone();
        bad.set(&"3".parse().unwrap(), &"1".parse().unwrap(), 1).unwrap();
        assert!(bad.check_shape().is_err());
        assert_eq!(m.diff(&bad).len(), 1);
    }

    #[test]
    fn product() {
        let m = sample();
        let id = LabeledMatrix::unit_diagonal(3, m.field, "2", m.rows.clone(), m.rows.clone());
        assert_eq!(id.mul(&m).unwrap(), m);
        assert!(m.mul(&m).is_err());
    }

    #[test]
    fn table_layout() {
        let text = sample().to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "        | ∅ (1) (3)");
        assert_eq!(lines[2], "      ∅ | 1   .   1");
        assert_eq!(lines.len(), 6);
    }
}
