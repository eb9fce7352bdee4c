#![allow(dead_code)]

use blowup_core::C64;
use serde_json::Value;
use std::sync::OnceLock;

pub fn fixtures() -> &'static Value {
    static F: OnceLock<Value> = OnceLock::new();
    F.get_or_init(|| {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/oracle/fixtures.json");
        let text = std::fs::read_to_string(path).expect("fixtures.json missing; run tests/oracle/generate.py");
        serde_json::from_str(&text).expect("fixtures.json is not valid JSON")
    })
}

pub fn cx(v: &Value) -> C64 {
    C64::new(v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

pub fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

pub fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}
