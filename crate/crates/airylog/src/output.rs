//! Serializable report shapes and the CSV / JSON / text writers.
//!
//! CSV: comma separated, `.` decimal point, LF line endings, a fixed header
//! row per command, reals with 17 significant digits. JSON: one top-level
//! object per command, snake_case keys.

use std::io::Write;

use serde::{Deserialize, Serialize};

use airylog_core::{SigmaSet, TailCoefficients, TailFit};

use crate::error::AppError;

/// Formats a real with 17 significant digits.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w)
}

/// Writes a header and rows of pre-formatted cells.
pub fn write_csv<W: Write>(w: W, header: &[&str], rows: &[Vec<String>]) -> Result<(), AppError> {
    let mut wtr = csv_writer(w);
    wtr.write_record(header)?;
    for r in rows {
        wtr.write_record(r)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(mut w: W, value: &T) -> Result<(), AppError> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

pub const COEFFS_HEADER: [&str; 8] = ["k", "a_k_bell", "a_k_reversion", "rel_gap", "S_k", "w_k", "I_k", "partial_sum"];
pub const ORACLE_HEADER: [&str; 4] = ["value", "abs_error_estimate", "n_evaluations", "truncation_point"];
pub const SERIES_HEADER: [&str; 4] = ["k", "I_k", "partial_sum", "ratio_to_oracle"];
pub const SIGMAS_HEADER: [&str; 5] = ["sigma", "closed", "direct", "abs_gap", "status"];
pub const FIT_HEADER: [&str; 3] = ["k", "S_k", "model"];
pub const ACCELERATE_HEADER: [&str; 17] = [
    "k_head",
    "fit_lo",
    "fit_hi",
    "a",
    "b",
    "c",
    "fitted_a",
    "fitted_b",
    "fitted_c",
    "fit_max_rel_residual",
    "used_published_fit",
    "head_sum",
    "remainder_bracket",
    "remainder",
    "i_accelerated",
    "i_oracle",
    "rel_error_vs_oracle",
];
pub const VERIFY_HEADER: [&str; 4] = ["id", "status", "description", "detail"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub k: usize,
    pub i_k: f64,
    pub partial_sum: f64,
    pub ratio_to_oracle: f64,
}

/// Output of `series`: partial sums of I and the head ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub i_oracle: f64,
    pub k_head: usize,
    pub head_sum: f64,
    pub head_ratio: f64,
    pub rows: Vec<SeriesRow>,
}

/// Output of `sigmas`: values plus a verdict per closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SigmasReport {
    #[serde(flatten)]
    pub sigmas: SigmaSet,
    pub sigma1_agrees: bool,
    pub sigma2_printed_flagged: bool,
    pub sigma2_corrected_agrees: bool,
    pub sigma3_agrees: bool,
}

impl SigmasReport {
    pub fn new(sigmas: SigmaSet) -> Self {
        SigmasReport {
            sigma1_agrees: sigmas.sigma1_agrees(),
            sigma2_printed_flagged: sigmas.sigma2_printed_flagged(),
            sigma2_corrected_agrees: sigmas.sigma2_corrected_agrees(),
            sigma3_agrees: sigmas.sigma3_agrees(),
            sigmas,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitRow {
    pub k: usize,
    pub s_k: f64,
    pub model: f64,
}

/// Output of `fit`: the fitted tail next to the published triple, plus the
/// S_k-versus-model data over every computed k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub fit: TailFit,
    pub published: TailCoefficients,
    pub rows: Vec<FitRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn line(&self) -> String {
        format!("[{}] {:>2} {}: {}", self.status(), self.id, self.description, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    pub passed: usize,
    pub failed: usize,
}
