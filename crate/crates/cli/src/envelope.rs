//! The JSON output envelope shared by every subcommand (except CSV output).

use serde::Serialize;
use std::time::Instant;

/// Bump on any breaking change to the payload shapes.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Envelope<'a, P: Serialize, Q: Serialize> {
    schema_version: &'static str,
    command: &'a str,
    params: P,
    payload: Q,
    elapsed_ms: u64,
}

/// Print the standard envelope to stdout as pretty JSON.
pub fn emit(command: &str, params: impl Serialize, payload: impl Serialize, started: Instant) {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        params,
        payload,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    // Serialization of these closed payload types cannot fail.
    let text = serde_json::to_string_pretty(&envelope).expect("envelope serialization");
    println!("{text}");
}
