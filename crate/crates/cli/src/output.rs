//! Human and line-delimited JSON output.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// One machine-mode line.
#[derive(Debug, Serialize)]
pub struct OutputRecord<'a> {
    pub schema_version: u32,
    pub command: &'a str,
    pub inputs: &'a Value,
    pub result: Value,
}

/// What a subcommand produced: JSON payloads (one output line each), the
/// human-readable rendering, and whether every check held.
#[derive(Debug, Default)]
pub struct Outcome {
    pub payloads: Vec<Value>,
    pub lines: Vec<String>,
    pub ok: bool,
}

impl Outcome {
    pub fn new(ok: bool) -> Self {
        Outcome {
            ok,
            ..Default::default()
        }
    }

    pub fn payload(&mut self, value: impl Serialize) {
        self.payloads
            .push(serde_json::to_value(value).expect("payloads serialize"));
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Human,
    Json,
    Quiet,
}

pub fn emit(mode: Mode, command: &str, inputs: &Value, outcome: Outcome) {
    match mode {
        Mode::Quiet => {}
        Mode::Human => {
            for line in outcome.lines {
                println!("{line}");
            }
        }
        Mode::Json => {
            for result in outcome.payloads {
                let record = OutputRecord {
                    schema_version: SCHEMA_VERSION,
                    command,
                    inputs,
                    result,
                };
                println!(
                    "{}",
                    serde_json::to_string(&record).expect("records serialize")
                );
            }
        }
    }
}
