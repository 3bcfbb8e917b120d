//! The `table` subcommand: exact invariant tables in three formats.

use k3count::forms::RealTopology;
use k3count::invariants::{compute_table, InvariantTable};

use crate::output::{exact_number, OutputFormat};

pub fn run(topologies: &[RealTopology], genus_max: usize, format: OutputFormat) -> String {
    let table = compute_table(topologies, genus_max);
    match format {
        OutputFormat::HumanTable => render_human(topologies, &table),
        OutputFormat::Csv => render_csv(topologies, &table),
        OutputFormat::StructuredJson => render_json(topologies, &table),
    }
}

fn render_human(topologies: &[RealTopology], table: &InvariantTable) -> String {
    let mut header: Vec<String> = vec!["g".to_string()];
    header.extend(
        topologies
            .iter()
            .map(|t| format!("e_R = {}", t.euler_real())),
    );
    header.push("complex".to_string());

    let mut rows: Vec<Vec<String>> = vec![header];
    for g in 0..=table.genus_max() {
        let mut row = vec![g.to_string()];
        row.extend((0..topologies.len()).map(|i| table.welschinger_count(i, g).to_string()));
        row.push(table.complex_count(g).to_string());
        rows.push(row);
    }

    let columns = rows[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:>width$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(topologies: &[RealTopology], table: &InvariantTable) -> String {
    let mut out = String::from("g");
    for t in topologies {
        out.push_str(&format!(",w(e_R={})", t.euler_real()));
    }
    out.push_str(",c\n");
    for g in 0..=table.genus_max() {
        out.push_str(&g.to_string());
        for i in 0..topologies.len() {
            out.push(',');
            out.push_str(&table.welschinger_count(i, g).to_string());
        }
        out.push(',');
        out.push_str(&table.complex_count(g).to_string());
        out.push('\n');
    }
    out
}

fn render_json(topologies: &[RealTopology], table: &InvariantTable) -> String {
    let rows: Vec<serde_json::Value> = (0..=table.genus_max())
        .map(|g| {
            let mut w = serde_json::Map::new();
            for (i, t) in topologies.iter().enumerate() {
                w.insert(
                    t.euler_real().to_string(),
                    exact_number(table.welschinger_count(i, g)),
                );
            }
            serde_json::json!({
                "g": g,
                "w": serde_json::Value::Object(w),
                "c": exact_number(table.complex_count(g)),
            })
        })
        .collect();
    let doc = serde_json::json!({ "rows": rows });
    serde_json::to_string_pretty(&doc).expect("table serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::output::parse_euler_list;

    #[test]
    fn zero_genus_table_is_all_ones() {
        let topologies = parse_euler_list("0").unwrap();
        let csv = run(&topologies, 0, OutputFormat::Csv);
        assert_eq!(csv, "g,w(e_R=0),c\n0,1,1\n");
    }

    #[test]
    fn json_round_trips() {
        let topologies = parse_euler_list("0,-18,20").unwrap();
        let rendered = run(&topologies, 20, OutputFormat::StructuredJson);
        let parsed: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap();
        assert_eq!(rendered, again);

        // Spot value: the genus-20 complex count survives exactly.
        let rows = parsed["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 21);
        assert_eq!(rows[20]["c"].to_string(), "216108718571250");
        assert_eq!(rows[20]["w"]["-18"].to_string(), "9808358121720");
    }

    #[test]
    fn csv_and_json_carry_identical_numbers() {
        let topologies = parse_euler_list("-6,14").unwrap();
        let csv = run(&topologies, 8, OutputFormat::Csv);
        let parsed: serde_json::Value =
            serde_json::from_str(&run(&topologies, 8, OutputFormat::StructuredJson)).unwrap();
        for (g, line) in csv.lines().skip(1).enumerate() {
            let cells: Vec<&str> = line.split(',').collect();
            let row = &parsed["rows"][g];
            assert_eq!(cells[0], row["g"].to_string());
            assert_eq!(cells[1], row["w"]["-6"].to_string());
            assert_eq!(cells[2], row["w"]["14"].to_string());
            assert_eq!(cells[3], row["c"].to_string());
        }
    }
}
