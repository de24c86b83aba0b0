//! Row output as aligned text or RFC-4180 CSV.

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

/// Serialises `rows` through the CSV writer so both formats share one header order.
pub fn render<T: Serialize>(rows: &[T], format: Format) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| anyhow::anyhow!("csv buffer: {}", e.error()))?;
    let text = String::from_utf8(bytes)?;
    match format {
        Format::Csv => Ok(text),
        Format::Text => align(&text),
    }
}

/// Right-aligns every column of a CSV document.
pub fn align(csv_text: &str) -> Result<String> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(csv_text.as_bytes());
    let records: Vec<Vec<String>> = reader
        .records()
        .map(|r| r.map(|rec| rec.iter().map(str::to_string).collect()))
        .collect::<std::result::Result<_, _>>()?;
    let cols = records.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| records.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for rec in &records {
        let cells: Vec<String> = rec.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        name: &'static str,
        value: f64,
    }

    #[test]
    fn csv_quotes_and_text_aligns() {
        let rows = [Row { name: "a,b", value: 1.5 }, Row { name: "long name", value: 2.0 }];
        let csv = render(&rows, Format::Csv).unwrap();
        assert_eq!(csv, "name,value\n\"a,b\",1.5\nlong name,2.0\n");
        let text = render(&rows, Format::Text).unwrap();
        assert_eq!(text, "     name  value\n      a,b    1.5\nlong name    2.0\n");
    }
}
