//! Record rendering. One field order rules all three formats: JSON lines
//! serialize in declaration order, CSV uses the same columns, and the
//! table prints the same cells padded for reading.

use crate::harness::{BenchRecord, RangeReport};
use crate::theorems::{PrimalityVerdict, TwinVerdict};
use serde::Serialize;
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Jsonl,
    Csv,
}

/// A flat record with a fixed column order.
pub trait Record: Serialize {
    fn headers(&self) -> Vec<&'static str>;
    fn fields(&self) -> Vec<String>;
}

/// One primality verdict as printed by `check`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub n: u64,
    pub method: &'static str,
    pub raw: bool,
    pub is_prime: bool,
    pub witness: u64,
    pub exception_applied: bool,
    /// Present only on raw runs: does the verdict contradict the oracle?
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_mismatch: Option<bool>,
}

impl CheckRecord {
    pub fn new(v: &PrimalityVerdict, raw: bool, oracle_mismatch: Option<bool>) -> CheckRecord {
        CheckRecord {
            n: v.n,
            method: v.method.name(),
            raw,
            is_prime: v.is_prime,
            witness: v.witness.value(),
            exception_applied: v.exception_applied,
            oracle_mismatch,
        }
    }
}

impl Record for CheckRecord {
    fn headers(&self) -> Vec<&'static str> {
        let mut h = vec!["n", "method", "raw", "is_prime", "witness", "exception_applied"];
        if self.oracle_mismatch.is_some() {
            h.push("oracle_mismatch");
        }
        h
    }

    fn fields(&self) -> Vec<String> {
        let mut f = vec![
            self.n.to_string(),
            self.method.to_string(),
            self.raw.to_string(),
            self.is_prime.to_string(),
            self.witness.to_string(),
            self.exception_applied.to_string(),
        ];
        if let Some(m) = self.oracle_mismatch {
            f.push(m.to_string());
        }
        f
    }
}

/// One twin-pair verdict as printed by `twins`.
#[derive(Debug, Clone, Serialize)]
pub struct TwinsRecord {
    pub n: u64,
    pub method: &'static str,
    pub raw: bool,
    pub is_twin_pair: bool,
    pub residue_mod_n: u64,
    pub residue_mod_n_plus_2: u64,
    pub exception_applied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_mismatch: Option<bool>,
}

impl TwinsRecord {
    pub fn new(v: &TwinVerdict, raw: bool, oracle_mismatch: Option<bool>) -> TwinsRecord {
        TwinsRecord {
            n: v.n,
            method: v.method.name(),
            raw,
            is_twin_pair: v.is_twin_pair,
            residue_mod_n: v.residue_mod_n.value(),
            residue_mod_n_plus_2: v.residue_mod_n_plus_2.value(),
            exception_applied: v.exception_applied,
            oracle_mismatch,
        }
    }
}

impl Record for TwinsRecord {
    fn headers(&self) -> Vec<&'static str> {
        let mut h = vec![
            "n",
            "method",
            "raw",
            "is_twin_pair",
            "residue_mod_n",
            "residue_mod_n_plus_2",
            "exception_applied",
        ];
        if self.oracle_mismatch.is_some() {
            h.push("oracle_mismatch");
        }
        h
    }

    fn fields(&self) -> Vec<String> {
        let mut f = vec![
            self.n.to_string(),
            self.method.to_string(),
            self.raw.to_string(),
            self.is_twin_pair.to_string(),
            self.residue_mod_n.to_string(),
            self.residue_mod_n_plus_2.to_string(),
            self.exception_applied.to_string(),
        ];
        if let Some(m) = self.oracle_mismatch {
            f.push(m.to_string());
        }
        f
    }
}

/// A whole range scan as printed by `verify`. List-valued columns are
/// semicolon-joined in CSV and table cells.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub method: &'static str,
    pub raw: bool,
    pub lo: u64,
    pub hi: u64,
    pub checked: u64,
    pub mismatches: Vec<u64>,
    pub expected_mismatches: Vec<u64>,
    pub conforms: bool,
}

impl VerifyRecord {
    pub fn new(report: &RangeReport, raw: bool) -> VerifyRecord {
        VerifyRecord {
            method: report.method.name(),
            raw,
            lo: report.lo,
            hi: report.hi,
            checked: report.checked,
            mismatches: report.mismatch_positions(),
            expected_mismatches: report.expected_mismatches.iter().copied().collect(),
            conforms: report.conforms,
        }
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

impl Record for VerifyRecord {
    fn headers(&self) -> Vec<&'static str> {
        vec![
            "method",
            "raw",
            "lo",
            "hi",
            "checked",
            "mismatches",
            "expected_mismatches",
            "conforms",
        ]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.method.to_string(),
            self.raw.to_string(),
            self.lo.to_string(),
            self.hi.to_string(),
            self.checked.to_string(),
            join(&self.mismatches),
            join(&self.expected_mismatches),
            self.conforms.to_string(),
        ]
    }
}

/// One timing row as printed by `bench`.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub method: &'static str,
    pub n: u64,
    pub elapsed_ns: u64,
    pub multiplications: u64,
}

impl From<&BenchRecord> for BenchRow {
    fn from(r: &BenchRecord) -> BenchRow {
        BenchRow {
            method: r.method.name(),
            n: r.n,
            elapsed_ns: r.elapsed_ns,
            multiplications: r.multiplications,
        }
    }
}

impl Record for BenchRow {
    fn headers(&self) -> Vec<&'static str> {
        vec!["method", "n", "elapsed_ns", "multiplications"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.method.to_string(),
            self.n.to_string(),
            self.elapsed_ns.to_string(),
            self.multiplications.to_string(),
        ]
    }
}

/// Writes the records in the chosen format. CSV always leads with the
/// header row; cell values never contain commas, so no quoting is needed.
pub fn render<R: Record>(records: &[R], format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Jsonl => {
            for r in records {
                let line = serde_json::to_string(r).map_err(io::Error::other)?;
                writeln!(out, "{line}")?;
            }
        }
        OutputFormat::Csv => {
            if let Some(first) = records.first() {
                writeln!(out, "{}", first.headers().join(","))?;
            }
            for r in records {
                writeln!(out, "{}", r.fields().join(","))?;
            }
        }
        OutputFormat::Table => {
            let Some(first) = records.first() else {
                return Ok(());
            };
            let headers = first.headers();
            let rows: Vec<Vec<String>> = records.iter().map(|r| r.fields()).collect();
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let print_row = |out: &mut dyn Write, cells: Vec<String>| -> io::Result<()> {
                let mut line = String::new();
                for (i, cell) in cells.iter().enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    if i + 1 == cells.len() {
                        line.push_str(cell);
                    } else {
                        line.push_str(&format!("{cell:<width$}", width = widths[i]));
                    }
                }
                writeln!(out, "{line}")
            };
            print_row(out, headers.iter().map(|h| h.to_string()).collect())?;
            for row in rows {
                print_row(out, row)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::theorem1_test;

    fn sample_check(raw: bool, mismatch: Option<bool>) -> CheckRecord {
        CheckRecord::new(&theorem1_test(11).unwrap(), raw, mismatch)
    }

    fn rendered<R: Record>(records: &[R], format: OutputFormat) -> String {
        let mut buf = Vec::new();
        render(records, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn jsonl_fields_appear_in_declaration_order() {
        let line = rendered(&[sample_check(false, None)], OutputFormat::Jsonl);
        assert_eq!(
            line,
            "{\"n\":11,\"method\":\"theorem1\",\"raw\":false,\"is_prime\":true,\
             \"witness\":9,\"exception_applied\":false}\n"
        );
    }

    #[test]
    fn jsonl_raw_run_appends_the_mismatch_warning() {
        let line = rendered(&[sample_check(true, Some(false))], OutputFormat::Jsonl);
        assert!(line.ends_with("\"exception_applied\":false,\"oracle_mismatch\":false}\n"));
    }

    #[test]
    fn csv_header_matches_the_jsonl_key_order() {
        let text = rendered(&[sample_check(false, None)], OutputFormat::Csv);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,method,raw,is_prime,witness,exception_applied"
        );
        assert_eq!(lines.next().unwrap(), "11,theorem1,false,true,9,false");
        let text = rendered(&[sample_check(true, Some(true))], OutputFormat::Csv);
        assert!(text.starts_with("n,method,raw,is_prime,witness,exception_applied,oracle_mismatch\n"));
    }

    #[test]
    fn all_formats_carry_the_same_values() {
        let rec = sample_check(false, None);
        let expect = ["11", "theorem1", "false", "true", "9"];
        for format in [OutputFormat::Table, OutputFormat::Jsonl, OutputFormat::Csv] {
            let text = rendered(std::slice::from_ref(&rec), format);
            for value in expect {
                assert!(text.contains(value), "{format:?} missing {value}: {text}");
            }
        }
    }

    #[test]
    fn table_pads_columns_and_keeps_one_row_per_record() {
        let rows = vec![
            BenchRow {
                method: "theorem1",
                n: 10006,
                elapsed_ns: 120,
                multiplications: 5004,
            },
            BenchRow {
                method: "theorem1",
                n: 10007,
                elapsed_ns: 99999,
                multiplications: 10003,
            },
        ];
        let text = rendered(&rows, OutputFormat::Table);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        // "method" pads to the width of "theorem1" plus the 2-space gutter.
        assert!(lines[0].starts_with("method    n"));
        assert!(lines[1].contains("10006"));
        assert!(lines[2].contains("10003"));
        // Cells align: both data rows place n at the same offset.
        assert_eq!(
            lines[1].find("10006").unwrap(),
            lines[2].find("10007").unwrap()
        );
    }

    #[test]
    fn verify_record_joins_lists_with_semicolons() {
        let report = crate::harness::verify_range(crate::theorems::Method::Theorem1, 5, 100, true)
            .unwrap();
        let rec = VerifyRecord::new(&report, true);
        let text = rendered(std::slice::from_ref(&rec), OutputFormat::Csv);
        assert!(text.contains("theorem1,true,5,100,96,6;9,6;9,true"));
        let json = rendered(&[rec], OutputFormat::Jsonl);
        assert!(json.contains("\"mismatches\":[6,9]"));
        assert!(json.contains("\"conforms\":true"));
    }

    #[test]
    fn twins_record_field_order() {
        let v = crate::theorems::theorem2_test(5).unwrap();
        let line = rendered(&[TwinsRecord::new(&v, false, None)], OutputFormat::Jsonl);
        assert_eq!(
            line,
            "{\"n\":5,\"method\":\"theorem2\",\"raw\":false,\"is_twin_pair\":true,\
             \"residue_mod_n\":0,\"residue_mod_n_plus_2\":1,\"exception_applied\":false}\n"
        );
    }
}
