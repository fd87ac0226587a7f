//! Machine-readable command reports. Field order is fixed by the struct
//! definitions, so serialized output is deterministic.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use octant_cover::duality::Decomposition;
use octant_cover::graph::Coloring;
use octant_cover::verify::Witness;

pub const STATUS_OK: &str = "ok";
pub const STATUS_VERIFICATION_FAILED: &str = "verification_failed";
pub const STATUS_UNCOLORABLE: &str = "uncolorable";
pub const STATUS_COLORABLE: &str = "colorable";

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colored_at: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub stats: Stats,
}

#[derive(Debug, Default, Serialize)]
pub struct Stats {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traces_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_monochromatic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<StepCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colorings_checked: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct StepCounts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl ReportDocument {
    pub fn new(status: &str, stats: Stats) -> Self {
        ReportDocument {
            status: status.to_string(),
            colors: None,
            colored_at: None,
            partition: None,
            witness: None,
            detail: None,
            stats,
        }
    }
}

/// Print the report to stdout and, when requested, to a file.
pub fn emit(report: &ReportDocument, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report).context("serializing report")?;
    text.push('\n');
    print!("{text}");
    if let Some(path) = out {
        fs::write(path, &text).with_context(|| format!("writing report to {}", path.display()))?;
    }
    Ok(())
}
