//! Report serialization: structured JSON and a plot-friendly CSV.

use std::fmt::Write as _;

use pixshuffle_core::AnalysisReport;

/// Output encodings for an [`AnalysisReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// JSON with stable field names (see the README for the schema).
    Structured,
    /// `index,R,G,B` rows of the primary image's series, for external
    /// plotting. Run `analyze` on the other file to plot its series.
    Csv,
}

/// Serializes a report in the requested format.
pub fn export_report(report: &AnalysisReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Structured => {
            serde_json::to_string_pretty(report).expect("report serialization cannot fail")
        }
        ReportFormat::Csv => {
            let mut out = String::from("index,R,G,B\n");
            let plain = &report.plain;
            for i in 0..plain.red.series.len() {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    i, plain.red.series[i], plain.green.series[i], plain.blue.series[i]
                );
            }
            out
        }
    }
}
