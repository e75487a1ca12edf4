use std::time::Duration;

use qwalk::{IntPoly, Tolerances};
use serde::Serialize;
use serde_json::{Number, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;
const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Serialize)]
pub struct Command {
    pub name: &'static str,
    pub args: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Command,
    pub input_digest: Option<String>,
    pub result: Value,
    pub tolerances: Tolerances,
    pub wall_time_seconds: f64,
}

impl Report {
    pub fn new(command: Command, inputs: &[&[u8]], result: Value, tolerances: Tolerances, elapsed: Duration) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            input_digest: (!inputs.is_empty()).then(|| digest(inputs)),
            result,
            tolerances,
            wall_time_seconds: elapsed.as_secs_f64(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        round_floats(&mut value);
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

/// SHA-256 over the inputs, each prefixed by its length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for input in inputs {
        hasher.update((input.len() as u64).to_le_bytes());
        hasher.update(input);
    }
    hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Rounds every non-integer number to 12 significant digits.
pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            let text = n.to_string();
            if text.contains(['.', 'e', 'E']) {
                if let Some(x) = n.as_f64() {
                    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses");
                    if let Some(r) = Number::from_f64(rounded) {
                        *n = r;
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Ascending integer coefficients, exact at any size.
pub fn poly_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| serde_json::from_str::<Value>(&c.to_string()).expect("integer literal"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        let mut v = serde_json::json!({"x": std::f64::consts::PI, "n": 3, "list": [0.1 + 0.2]});
        round_floats(&mut v);
        assert_eq!(v["x"].to_string(), "3.14159265359");
        assert_eq!(v["n"].to_string(), "3");
        assert_eq!(v["list"][0].to_string(), "0.3");
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big: qwalk::Integer = "123456789012345678901234567890".parse().unwrap();
        let p = IntPoly::new(vec![big, 1.into()]);
        let mut v = poly_json(&p);
        round_floats(&mut v);
        assert_eq!(v.to_string(), "[123456789012345678901234567890,1]");
    }

    #[test]
    fn digest_is_hex() {
        let d = digest(&[b"abc"]);
        assert_eq!(d.len(), 64);
        assert!(d.chars().all(|c| c.is_ascii_hexdigit()));
        assert_ne!(d, digest(&[b"ab", b"c"]));
    }
}
