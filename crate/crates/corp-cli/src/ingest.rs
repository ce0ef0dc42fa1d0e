//! CSV ingestion: a `forecast,outcome` header followed by one observation
//! per row. Errors name the offending data row, counting from 1.

use std::path::Path;

use corp::ForecastDataset;

use crate::CliError;

pub fn ingest_csv(path: &Path) -> Result<ForecastDataset, CliError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_path(path).map_err(|e| {
        match e.kind() {
            csv::ErrorKind::Io(io) => CliError::Io(format!("{}: {io}", path.display())),
            _ => CliError::Validation(format!("{}: {e}", path.display())),
        }
    })?;

    let headers =
        reader.headers().map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    if headers.len() != 2 || &headers[0] != "forecast" || &headers[1] != "outcome" {
        return Err(CliError::Validation(format!(
            "{}: missing header: expected `forecast,outcome`",
            path.display()
        )));
    }

    let mut forecasts = Vec::new();
    let mut outcomes = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| match e.kind() {
            csv::ErrorKind::Io(io) => CliError::Io(format!("{}: {io}", path.display())),
            _ => CliError::Validation(format!("row {row}: {e}")),
        })?;
        if record.len() != 2 {
            return Err(CliError::Validation(format!(
                "row {row}: expected 2 fields, found {}",
                record.len()
            )));
        }
        let forecast: f64 = record[0].trim().parse().map_err(|_| {
            CliError::Validation(format!("row {row}: invalid forecast `{}`", &record[0]))
        })?;
        if !(0.0..=1.0).contains(&forecast) {
            return Err(CliError::Validation(format!("row {row}: forecast out of range")));
        }
        let outcome: u8 = match record[1].trim() {
            "0" => 0,
            "1" => 1,
            other => {
                return Err(CliError::Validation(format!(
                    "row {row}: outcome must be 0 or 1, got `{other}`"
                )))
            }
        };
        forecasts.push(forecast);
        outcomes.push(outcome);
    }

    if forecasts.is_empty() {
        return Err(CliError::Validation("empty input".to_string()));
    }
    ForecastDataset::new(forecasts, outcomes).map_err(|e| CliError::Validation(e.to_string()))
}
