//! The `asym` subcommand: exact log-counts against closed-form predictions.

use k3count::asymptotics::{convergence_report, CountFamily, RowOutcome};
use k3count::forms::RealTopology;

use crate::output::{format_significant, json_float_repr, OutputFormat};

/// Parses the `--er` value for this command: the keyword `complex` or a
/// single even Euler characteristic in the realizable range.
pub fn parse_family(raw: &str) -> Result<CountFamily, String> {
    let raw = raw.trim();
    if raw == "complex" {
        return Ok(CountFamily::Complex);
    }
    let value: i64 = raw
        .parse()
        .map_err(|_| format!("expected 'complex' or an even integer, got '{raw}'"))?;
    let topology = RealTopology::new(value).map_err(|e| e.to_string())?;
    Ok(CountFamily::Real(topology))
}

pub fn run(family: CountFamily, points: &[u64], format: OutputFormat) -> Result<String, String> {
    let report = convergence_report(family, points).map_err(|e| e.to_string())?;
    let family_name = match family {
        CountFamily::Complex => "complex".to_string(),
        CountFamily::Real(t) => format!("e_R={}", t.euler_real()),
    };
    Ok(match format {
        OutputFormat::HumanTable => {
            let mut out = format!("family: {family_name}\n");
            out.push_str(&format!(
                "{:>8}  {:>12}  {:>12}  {:>10}\n",
                "n", "log_count", "prediction", "ratio"
            ));
            for row in &report.rows {
                match &row.outcome {
                    RowOutcome::Computed {
                        log_count,
                        prediction,
                        ratio,
                    } => out.push_str(&format!(
                        "{:>8}  {:>12}  {:>12}  {:>10}\n",
                        row.n,
                        format_significant(*log_count, 6),
                        format_significant(*prediction, 6),
                        format_significant(*ratio, 6),
                    )),
                    RowOutcome::Skipped { reason } => {
                        out.push_str(&format!("{:>8}  skipped ({reason})\n", row.n))
                    }
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,log_count,prediction,ratio\n");
            for row in &report.rows {
                match &row.outcome {
                    RowOutcome::Computed {
                        log_count,
                        prediction,
                        ratio,
                    } => out.push_str(&format!(
                        "{},{},{},{}\n",
                        row.n,
                        json_float_repr(*log_count),
                        json_float_repr(*prediction),
                        json_float_repr(*ratio),
                    )),
                    RowOutcome::Skipped { .. } => out.push_str(&format!("{},,,\n", row.n)),
                }
            }
            out
        }
        OutputFormat::StructuredJson => {
            let rows: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|row| match &row.outcome {
                    RowOutcome::Computed {
                        log_count,
                        prediction,
                        ratio,
                    } => serde_json::json!({
                        "n": row.n,
                        "log_count": log_count,
                        "prediction": prediction,
                        "ratio": ratio,
                    }),
                    RowOutcome::Skipped { reason } => serde_json::json!({
                        "n": row.n,
                        "log_count": null,
                        "prediction": null,
                        "ratio": null,
                        "reason": reason,
                    }),
                })
                .collect();
            let family_value = match family {
                CountFamily::Complex => serde_json::Value::Null,
                CountFamily::Real(t) => serde_json::json!(t.euler_real()),
            };
            let doc = serde_json::json!({
                "family": family_name,
                "e_R": family_value,
                "rows": rows,
            });
            let mut rendered = serde_json::to_string_pretty(&doc).expect("report serializes");
            rendered.push('\n');
            rendered
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parsing() {
        assert_eq!(parse_family("complex").unwrap(), CountFamily::Complex);
        match parse_family("-18").unwrap() {
            CountFamily::Real(t) => assert_eq!(t.euler_real(), -18),
            other => panic!("unexpected family {other:?}"),
        }
        assert!(parse_family("7").is_err());
        assert!(parse_family("-20").is_err());
        assert!(parse_family("both").is_err());
    }

    #[test]
    fn skipped_rows_render_in_all_formats() {
        let family = parse_family("0").unwrap();
        let human = run(family, &[7, 8], OutputFormat::HumanTable).unwrap();
        assert!(human.contains("skipped (w_n = 0)"));

        let csv = run(family, &[7, 8], OutputFormat::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,log_count,prediction,ratio");
        assert_eq!(lines[1], "7,,,");
        assert!(lines[2].starts_with("8,"));

        let json = run(family, &[7, 8], OutputFormat::StructuredJson).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["rows"][0]["reason"], "w_n = 0");
        assert!(doc["rows"][0]["ratio"].is_null());
        assert!(doc["rows"][1]["ratio"].is_number());
    }

    #[test]
    fn csv_and_json_numbers_agree() {
        let family = parse_family("complex").unwrap();
        let csv = run(family, &[50, 100], OutputFormat::Csv).unwrap();
        let json = run(family, &[50, 100], OutputFormat::StructuredJson).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        for (i, line) in csv.lines().skip(1).enumerate() {
            let cells: Vec<&str> = line.split(',').collect();
            let row = &doc["rows"][i];
            assert_eq!(cells[0], row["n"].to_string());
            assert_eq!(cells[1], row["log_count"].to_string());
            assert_eq!(cells[2], row["prediction"].to_string());
            assert_eq!(cells[3], row["ratio"].to_string());
        }
    }
}
