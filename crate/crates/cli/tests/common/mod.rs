//! Helpers shared by the CLI test binaries.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

pub fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_covercount"))
}

pub fn run(args: &[&str]) -> Output {
    cli().args(args).output().expect("binary runs")
}

pub fn run_json(args: &[&str]) -> (i32, Value) {
    let output = run(args);
    let code = output.status.code().expect("exit code");
    let stdout = String::from_utf8(output.stdout).expect("utf8 stdout");
    let report = serde_json::from_str(&stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}):\n{stdout}");
    });
    (code, report)
}

#[allow(dead_code)] // not every test binary writes files
pub fn write_file(path: &Path, contents: &str) {
    std::fs::write(path, contents).expect("write test file");
}
