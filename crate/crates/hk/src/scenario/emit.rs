//! Uniform output rows and the deterministic emitters behind the CLI.
//!
//! Every subcommand reduces to a list of [`OutputRow`]s with a fixed column
//! set, so the table, CSV and JSON renderings of a run agree field by field.
//! Exact rationals are carried as decimal numerator/denominator strings
//! (arbitrary precision survives CSV and JSON round trips); the single
//! `normalized_f64` column is a convenience float of the row's rational
//! value and is never used for decisions.
//!
//! Emission is deterministic: rows arrive already ordered by the caller and
//! every formatting choice below is stable, so identical inputs produce
//! byte-identical CSV and JSON.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiplicity::{Estimate, HkRecord};

/// The CSV header; field order is the serialization order of [`OutputRow`].
pub const CSV_HEADER: &str =
    "case,q,colength,normalized_num,normalized_den,estimate_num,estimate_den,verdict,normalized_f64";

/// One row of subcommand output.
///
/// `case` names the scenario (and, for multi-part runs, the part after a
/// colon).  `q` is the Frobenius exponent, except for power-sequence rows
/// where it holds the power `n` and for verdict rows where it echoes the
/// largest exponent involved.  Exactly one of the value groups is normally
/// populated: `colength` plus the `normalized_*` pair for exact samples,
/// the `estimate_*` pair for limit estimates, or `verdict` for
/// semidecisions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRow {
    pub case: String,
    pub q: u64,
    pub colength: Option<u64>,
    pub normalized_num: Option<String>,
    pub normalized_den: Option<String>,
    pub estimate_num: Option<String>,
    pub estimate_den: Option<String>,
    pub verdict: Option<String>,
    pub normalized_f64: Option<f64>,
}

impl OutputRow {
    fn empty(case: &str, q: u64) -> OutputRow {
        OutputRow {
            case: case.to_string(),
            q,
            colength: None,
            normalized_num: None,
            normalized_den: None,
            estimate_num: None,
            estimate_den: None,
            verdict: None,
            normalized_f64: None,
        }
    }

    /// A sampled point of a Hilbert-Kunz function.
    pub fn from_record(case: &str, record: &HkRecord) -> OutputRow {
        let mut row = Self::empty(case, record.q);
        row.colength = Some(record.colength);
        row.normalized_num = Some(record.normalized.numer().to_string());
        row.normalized_den = Some(record.normalized.denom().to_string());
        row.normalized_f64 = record.normalized.to_f64();
        row
    }

    /// An exact rational value (scaled lengths, sequence entries).
    pub fn from_value(case: &str, q: u64, value: &BigRational) -> OutputRow {
        let mut row = Self::empty(case, q);
        row.normalized_num = Some(value.numer().to_string());
        row.normalized_den = Some(value.denom().to_string());
        row.normalized_f64 = value.to_f64();
        row
    }

    /// A limit estimate; `q` should be the largest exponent that fed it.
    pub fn from_estimate(case: &str, q: u64, estimate: &Estimate) -> OutputRow {
        let mut row = Self::empty(case, q);
        row.estimate_num = Some(estimate.value.numer().to_string());
        row.estimate_den = Some(estimate.value.denom().to_string());
        row.normalized_f64 = estimate.value.to_f64();
        row
    }

    /// A semidecision.
    pub fn from_verdict(case: &str, q: u64, verdict: &str) -> OutputRow {
        let mut row = Self::empty(case, q);
        row.verdict = Some(verdict.to_string());
        row
    }

    /// The row's exact rational value, when it carries one.
    pub fn rational(&self) -> Option<BigRational> {
        let pair = |num: &Option<String>, den: &Option<String>| {
            let num = num.as_ref()?.parse().ok()?;
            let den = den.as_ref()?.parse().ok()?;
            Some(BigRational::new(num, den))
        };
        pair(&self.normalized_num, &self.normalized_den)
            .or_else(|| pair(&self.estimate_num, &self.estimate_den))
    }
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn option_string<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

/// Renders rows as CSV with the fixed header; `None` becomes an empty cell.
pub fn emit_csv(rows: &[OutputRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let fields = [
            csv_field(&row.case),
            row.q.to_string(),
            option_string(&row.colength),
            option_string(&row.normalized_num),
            option_string(&row.normalized_den),
            option_string(&row.estimate_num),
            option_string(&row.estimate_den),
            csv_field(&option_string(&row.verdict)),
            option_string(&row.normalized_f64),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Renders rows as a pretty-printed JSON array mirroring the CSV fields.
pub fn emit_json(rows: &[OutputRow]) -> Result<String> {
    let mut text = serde_json::to_string_pretty(rows)
        .map_err(|e| Error::Io(std::io::Error::other(format!("serializing rows: {e}"))))?;
    text.push('\n');
    Ok(text)
}

/// Parses rows back from [`emit_json`] output (round-trip identity).
pub fn parse_json_rows(text: &str) -> Result<Vec<OutputRow>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("parsing row JSON: {e}")))
}

fn ratio_cell(num: &Option<String>, den: &Option<String>) -> String {
    match (num, den) {
        (Some(n), Some(d)) if d == "1" => n.clone(),
        (Some(n), Some(d)) => format!("{n}/{d}"),
        _ => String::new(),
    }
}

/// Renders rows as an aligned text table with optional footer lines.
pub fn emit_table(rows: &[OutputRow], footers: &[String]) -> String {
    let header = ["case", "q", "colength", "normalized", "estimate", "verdict"];
    let mut cells: Vec<[String; 6]> = Vec::with_capacity(rows.len());
    for row in rows {
        cells.push([
            row.case.clone(),
            row.q.to_string(),
            option_string(&row.colength),
            ratio_cell(&row.normalized_num, &row.normalized_den),
            ratio_cell(&row.estimate_num, &row.estimate_den),
            option_string(&row.verdict),
        ]);
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let render = |cols: [&str; 6]| -> String {
        let mut line = String::new();
        for (i, (cell, width)) in cols.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            // Right-align numeric columns, left-align text.
            if i == 0 || i == 5 {
                line.push_str(&format!("{cell:<width$}"));
            } else {
                line.push_str(&format!("{cell:>width$}"));
            }
        }
        line.trim_end().to_string()
    };
    let mut out = render([header[0], header[1], header[2], header[3], header[4], header[5]]);
    out.push('\n');
    out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
    out.push('\n');
    for row in &cells {
        out.push_str(&render([
            &row[0], &row[1], &row[2], &row[3], &row[4], &row[5],
        ]));
        out.push('\n');
    }
    for footer in footers {
        out.push_str("# ");
        out.push_str(footer);
        out.push('\n');
    }
    out
}

/// Formats an estimate as `value` or `value ± uncertainty` for footers and
/// verdict records.
pub fn describe_estimate(estimate: &Estimate) -> String {
    if estimate.is_exact() {
        format!("{} (exact)", estimate.value)
    } else {
        format!("{} ± {}", estimate.value, estimate.uncertainty)
    }
}

/// True when the ratio is an integer (used to shorten table cells).
pub fn is_integral(value: &BigRational) -> bool {
    value.denom().is_one()
}
