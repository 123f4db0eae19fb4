//! CSV rendering of reports.
//!
//! Output is RFC-4180-style: a header row naming columns and units, one data
//! row per frequency/angle/cell, LF line endings, and full-precision
//! locale-independent decimal numbers (Rust's shortest round-trip `f64`
//! formatting). Identical reports render byte-identical files.

use std::path::Path;

use crate::analysis::{EnhancementReport, PhaseErrorReport};
use crate::error::{Error, Result};
use crate::solver::PatternScan;

/// A report that renders itself as a CSV document.
pub trait ToCsv {
    fn csv_string(&self) -> String;
}

impl ToCsv for EnhancementReport {
    fn csv_string(&self) -> String {
        let mut out = String::from("freq_ghz,configured_db,all_off_db,enhancement_db\n");
        for i in 0..self.freqs_ghz.len() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.freqs_ghz[i], self.configured_db[i], self.all_off_db[i], self.enhancement_db[i]
            ));
        }
        out
    }
}

impl ToCsv for PatternScan {
    fn csv_string(&self) -> String {
        let mut out = String::from("freq_ghz,angle_deg,field_re,field_im,power_db\n");
        for (angle, sample) in self.angles_deg.iter().zip(&self.samples) {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.freq_ghz, angle, sample.complex_field.re, sample.complex_field.im, sample.power_db
            ));
        }
        out
    }
}

impl ToCsv for PhaseErrorReport {
    fn csv_string(&self) -> String {
        let mut out = String::from("row,col,ideal_deg,achieved_deg,error_deg\n");
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                let idx = i * self.n_cols + j;
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    i, j, self.ideal_deg[idx], self.achieved_deg[idx], self.error_deg[idx]
                ));
            }
        }
        out.push_str(&format!("# freq_ghz,{}\n", self.freq_ghz));
        out.push_str(&format!("# rms_error_deg,{}\n", self.rms_error_deg));
        out.push_str(&format!("# max_abs_error_deg,{}\n", self.max_abs_error_deg));
        for (i, rms) in self.row_rms_deg.iter().enumerate() {
            out.push_str(&format!("# row_rms_deg,{i},{rms}\n"));
        }
        out
    }
}

/// Write a report to a file.
pub fn export_csv<T: ToCsv>(report: &T, path: &Path) -> Result<()> {
    std::fs::write(path, report.csv_string()).map_err(|e| Error::Io {
        context: format!("writing CSV to {}", path.display()),
        source: e,
    })
}
