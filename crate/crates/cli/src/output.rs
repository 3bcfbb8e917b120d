//! Shared output plumbing: format selection, float rendering, Euler
//! characteristic list parsing, and exact-integer JSON numbers.

use clap::ValueEnum;
use k3count::forms::RealTopology;
use num_bigint::BigInt;

/// Exit code for a clean run with every check passing.
pub const EXIT_OK: i32 = 0;
/// Exit code when at least one verification check reports a violation.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit code for usage and domain errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    /// Aligned, human-readable table.
    HumanTable,
    /// Comma-separated values with a header row.
    Csv,
    /// JSON with exact integers (round-trips losslessly).
    StructuredJson,
}

/// Formats available for verification reports (CSV carries no natural
/// representation of nested violation lists).
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ReportFormat {
    HumanTable,
    StructuredJson,
}

/// Renders a float with the given number of significant digits in plain
/// positional notation; used for human-readable output only.
pub fn format_significant(value: f64, significant: u32) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let exponent = value.abs().log10().floor() as i32;
    let decimals = (significant as i32 - 1 - exponent).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Serializes a float exactly as structured output does, so CSV and JSON
/// carry byte-identical numeric content.
pub fn json_float_repr(value: f64) -> String {
    serde_json::Number::from_f64(value)
        .map(|n| n.to_string())
        .unwrap_or_else(|| "null".to_string())
}

/// An exact integer as a JSON number (no float transit).
pub fn exact_number(value: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_string_unchecked(value.to_string()),
    )
}

/// Parses the `--er` flag: either the keyword `all` (every realizable
/// Euler characteristic, ascending) or a comma-separated list of even
/// integers in the realizable range. Order is preserved; duplicates are
/// dropped after their first occurrence.
pub fn parse_euler_list(raw: &str) -> Result<Vec<RealTopology>, String> {
    if raw.trim() == "all" {
        return Ok(RealTopology::all_realizable());
    }
    let mut seen = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let value: i64 = part
            .parse()
            .map_err(|_| format!("invalid Euler characteristic '{part}'"))?;
        let topology = RealTopology::new(value).map_err(|e| e.to_string())?;
        if !seen.contains(&topology) {
            seen.push(topology);
        }
    }
    if seen.is_empty() {
        return Err("empty Euler characteristic list".to_string());
    }
    Ok(seen)
}

/// Parses the `--points` flag: comma-separated positive indices.
pub fn parse_points(raw: &str) -> Result<Vec<u64>, String> {
    let mut points = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let value: u64 = part.parse().map_err(|_| format!("invalid index '{part}'"))?;
        if value == 0 {
            return Err("indices must be positive".to_string());
        }
        points.push(value);
    }
    if points.is_empty() {
        return Err("empty point list".to_string());
    }
    Ok(points)
}
