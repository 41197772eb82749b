use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Number, Value};

use s3bundle::bundles::BundleSpec;
use s3bundle::decide::{HopfWitness, Verdict};
use s3bundle::linkforms::StandardWitness;

pub const SCHEMA_VERSION: &str = "1";

/// Machine-readable output of every non-streaming subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub provenance: Vec<String>,
}

impl OutputEnvelope {
    pub fn new(command: &str, inputs: Value, result: Value, provenance: &[&str]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            result,
            provenance: provenance.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn render(&self) -> String {
        let value = serde_json::to_value(self).expect("envelope is plain data");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

/// Exact JSON integer for an arbitrary-precision value.
pub fn int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
}

pub fn standard_witness(w: &Option<StandardWitness>) -> Value {
    match w {
        Some(w) => json!({ "tau": int(w.tau.value()), "sign": w.sign.as_i8() }),
        None => Value::Null,
    }
}

pub fn hopf_witness(w: &Option<HopfWitness>) -> Value {
    match w {
        Some(w) => json!({ "m": int(&w.m), "k": int(&w.k), "sign": w.sign.as_i8() }),
        None => Value::Null,
    }
}

pub fn bundle(b: &BundleSpec) -> Value {
    json!({ "m": int(b.m()), "n": int(b.n()) })
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "reason": v.reason.code(),
        "notes": v.notes,
        "witnesses": {
            "standard": standard_witness(&v.witnesses.standard),
            "bundles": v.witnesses.bundles.iter().map(bundle).collect::<Vec<_>>(),
            "hopf": hopf_witness(&v.witnesses.hopf),
        },
    })
}
