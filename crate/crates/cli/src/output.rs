use std::fmt::Display;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key=value` lines.
    Text,
    /// Newline-delimited JSON, one object per record.
    Json,
}

/// Writes a record: `text` in text mode, `json` on one line otherwise.
pub fn emit(format: Format, text: impl Display, json: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
    }
}

/// Shortest decimal within 1e-12, keeping one fractional digit: `4.0`, `4.054795889524`.
pub fn float(x: f64) -> String {
    let s = format!("{x:.12}");
    let trimmed = s.trim_end_matches('0');
    if trimmed.ends_with('.') {
        format!("{trimmed}0")
    } else {
        trimmed.to_string()
    }
}
