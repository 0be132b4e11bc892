#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use oilu::sevenseg::{Base, SplitStrategy};
use serde_json::Value;

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub const FROZEN_ORACLE: &str = include_str!("../oracle/split_tables.json");

pub fn frozen_oracle() -> Value {
    serde_json::from_str(FROZEN_ORACLE).expect("frozen oracle output is JSON")
}

pub fn oracle_key(s: SplitStrategy, base: Base) -> String {
    format!("{}{}", s.to_string().to_uppercase(), base.radix())
}

/// `(upper, lower, replaced)` rows of one oracle table, in digit order.
pub fn oracle_table(oracle: &Value, s: SplitStrategy, base: Base) -> Vec<(u8, u8, bool)> {
    oracle["tables"][oracle_key(s, base)]
        .as_array()
        .expect("table present")
        .iter()
        .map(|row| {
            (
                row["upper"].as_u64().unwrap() as u8,
                row["lower"].as_u64().unwrap() as u8,
                row["replaced"].as_bool().unwrap(),
            )
        })
        .collect()
}

/// Re-runs the enumeration script, if a Python interpreter is available.
pub fn rerun_oracle_script() -> Option<String> {
    let script = manifest_dir().join("tests/oracle/split_oracle.py");
    let out = Command::new("python3").arg(script).output().ok()?;
    out.status
        .success()
        .then(|| String::from_utf8(out.stdout).unwrap())
}

pub fn oilu_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oilu"))
}
