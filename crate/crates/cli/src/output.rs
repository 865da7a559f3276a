//! Output envelope, exact-integer encoding and format dispatch.

use std::fmt::Write as _;

use serde::{Serialize, Serializer};

/// Integers with magnitude at or above this are emitted as decimal strings in JSON.
pub const JSON_SAFE_LIMIT: i128 = 1 << 53;

/// An exact integer. Serializes as a JSON number below 2^53 in magnitude and
/// as a decimal string otherwise, so no consumer ever rounds it through a double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exact(pub i128);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() < JSON_SAFE_LIMIT {
            serializer.serialize_i64(self.0 as i64)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

impl std::fmt::Display for Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! exact_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Exact {
            fn from(v: $t) -> Self {
                Exact(v as i128)
            }
        }
    )*};
}
exact_from!(u64, i64, u32, usize);

pub fn exacts<T: Copy + Into<Exact>>(values: &[T]) -> Vec<Exact> {
    values.iter().map(|&v| v.into()).collect()
}

pub fn join(values: &[Exact], sep: &str) -> String {
    values.iter().map(Exact::to_string).collect::<Vec<_>>().join(sep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Terminal styling for the text format.
#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn verdict(&self, ok: bool) -> String {
        match (ok, self.color) {
            (true, true) => "\x1b[32mPASS\x1b[0m".into(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
            (true, false) => "PASS".into(),
            (false, false) => "FAIL".into(),
        }
    }
}

/// A command result that knows how to print itself.
pub trait Payload: Serialize {
    fn text(&self, out: &mut String, style: Style);
    fn csv(&self) -> Table;
}

/// Header plus rows for the CSV format.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct Envelope<'a, I, R> {
    pub command: &'static str,
    pub inputs: &'a I,
    pub result: &'a R,
    pub elapsed_ms: u64,
    pub version: &'static str,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn render<I: Serialize, R: Payload>(
    format: Format,
    command: &'static str,
    inputs: &I,
    result: &R,
    elapsed_ms: u64,
    style: Style,
) -> String {
    match format {
        Format::Json => {
            let envelope = Envelope {
                command,
                inputs,
                result,
                elapsed_ms,
                version: VERSION,
            };
            let mut s = serde_json::to_string_pretty(&envelope).expect("payloads serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let table = result.csv();
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(&table.header).expect("in-memory write");
            for row in &table.rows {
                writer.write_record(row).expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
        Format::Text => {
            let mut out = String::new();
            result.text(&mut out, style);
            let _ = writeln!(out, "({elapsed_ms} ms, frobkit {VERSION})");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_switches_to_strings_at_2_pow_53() {
        let below = Exact((1 << 53) - 1);
        let at = Exact(1 << 53);
        assert_eq!(serde_json::to_string(&below).unwrap(), "9007199254740991");
        assert_eq!(serde_json::to_string(&at).unwrap(), "\"9007199254740992\"");
        assert_eq!(serde_json::to_string(&Exact(-(1 << 53))).unwrap(), "\"-9007199254740992\"");
        assert_eq!(serde_json::to_string(&Exact(-1)).unwrap(), "-1");
    }
}
