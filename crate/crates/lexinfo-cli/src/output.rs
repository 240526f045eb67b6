//! Shared output conventions: reproducible JSON with an embedded run
//! manifest, 12-significant-digit numbers, and the bits/nats switch.

use serde::Serialize;
use serde_json::{Map, Value};

/// Base of the reported logarithmic quantities.
#[derive(Clone, Copy, PartialEq)]
pub enum LogBase {
    Bits,
    Nats,
}

impl LogBase {
    /// Factor converting a value in bits to this base.
    pub fn scale(self) -> f64 {
        match self {
            LogBase::Bits => 1.0,
            LogBase::Nats => std::f64::consts::LN_2,
        }
    }
}

/// Rounds to 12 significant digits so printed numbers are stable across
/// runs and platforms.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor();
    let exponent = 11.0 - magnitude;
    if !(-300.0..=300.0).contains(&exponent) {
        return x;
    }
    let scale = 10f64.powi(exponent as i32);
    (x * scale).round() / scale
}

/// A measure value scaled to the requested base and rounded for output.
pub fn measure(x: f64, base: LogBase) -> Value {
    Value::from(sig12(x * base.scale()))
}

/// Identification block echoed into every JSON output: subcommand, inputs,
/// parsed flags, seed, output path, and tool version.
#[derive(Serialize)]
pub struct RunManifest {
    pub subcommand: &'static str,
    pub inputs: Vec<String>,
    pub flags: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub version: &'static str,
}

impl RunManifest {
    pub fn new(subcommand: &'static str) -> Self {
        RunManifest {
            subcommand,
            inputs: Vec::new(),
            flags: Map::new(),
            seed: None,
            output: None,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn input(mut self, path: &str) -> Self {
        self.inputs.push(path.to_string());
        self
    }

    pub fn flag(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.flags.insert(name.to_string(), value.into());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn output(mut self, path: &str) -> Self {
        self.output = Some(path.to_string());
        self
    }
}

/// Pretty-prints a JSON object with the manifest under the "manifest" key.
pub fn render(manifest: &RunManifest, mut body: Map<String, Value>) -> String {
    body.insert(
        "manifest".to_string(),
        serde_json::to_value(manifest).expect("manifest serializes"),
    );
    let mut text = serde_json::to_string_pretty(&Value::Object(body)).expect("body serializes");
    text.push('\n');
    text
}
