//! Golden corpus: one JSON object per line,
//! `{"name": ..., "argv": [...], "expected": <json output>}`.
//! An optional `"exit"` field gives the expected exit code (default 0).

use serde_json::Value;

use super::{run_command, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub name: String,
    pub argv: Vec<String>,
    pub expected: Value,
    pub exit: i32,
}

pub fn parse_corpus(src: &str) -> Result<Vec<CorpusCase>, String> {
    let mut cases = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| format!("line {}: {what}", lineno + 1);
        let v: Value = serde_json::from_str(line).map_err(|e| bad(&e.to_string()))?;
        let name = v.get("name").and_then(Value::as_str).ok_or_else(|| bad("missing \"name\""))?;
        let argv = v
            .get("argv")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"argv\""))?
            .iter()
            .map(|a| a.as_str().map(str::to_string))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad("\"argv\" must be an array of strings"))?;
        let expected = v.get("expected").cloned().ok_or_else(|| bad("missing \"expected\""))?;
        let exit = match v.get("exit") {
            None => 0,
            Some(e) => e.as_i64().ok_or_else(|| bad("\"exit\" must be an integer"))? as i32,
        };
        cases.push(CorpusCase { name: name.to_string(), argv, expected, exit });
    }
    Ok(cases)
}

/// First difference between two JSON results, naming the term key.
fn first_diff(expected: &Value, got: &Value) -> String {
    let terms = |v: &Value| -> Option<Vec<(Value, Value)>> {
        v.get("terms")?
            .as_array()?
            .iter()
            .map(|t| Some((t.get("key")?.clone(), t.get("coeff")?.clone())))
            .collect()
    };
    let (Some(e), Some(g)) = (terms(expected), terms(got)) else {
        return format!("expected {expected}, got {got}");
    };
    if expected.get("basis") != got.get("basis") {
        return format!("basis: expected {:?}, got {:?}", expected.get("basis"), got.get("basis"));
    }
    for (k, c) in &e {
        match g.iter().find(|(k2, _)| k2 == k) {
            None => return format!("key {k}: expected {c}, missing"),
            Some((_, c2)) if c2 != c => return format!("key {k}: expected {c}, got {c2}"),
            _ => {}
        }
    }
    for (k, c) in &g {
        if !e.iter().any(|(k2, _)| k2 == k) {
            return format!("key {k}: unexpected term {c}");
        }
    }
    "term order differs".to_string()
}

/// Runs every case; returns the exit code and a report.
pub fn run_corpus_source(src: &str) -> (i32, String) {
    let cases = match parse_corpus(src) {
        Ok(c) => c,
        Err(e) => return (EXIT_USAGE, format!("malformed corpus: {e}")),
    };
    let mut failures = Vec::new();
    for (i, case) in cases.iter().enumerate() {
        let (code, out) = run_command(&case.argv);
        if code != case.exit {
            failures.push(format!("case {i} '{}': exit {code}, expected {}: {out}", case.name, case.exit));
            continue;
        }
        if code != EXIT_OK {
            continue;
        }
        let got: Value = match serde_json::from_str(&out) {
            Ok(v) => v,
            Err(_) => {
                failures.push(format!("case {i} '{}': output is not JSON: {out}", case.name));
                continue;
            }
        };
        if got != case.expected {
            failures.push(format!("case {i} '{}': {}", case.name, first_diff(&case.expected, &got)));
        }
    }
    let mut report = format!(
        "{} cases, {} passed, {} failed",
        cases.len(),
        cases.len() - failures.len(),
        failures.len()
    );
    for f in &failures {
        report.push_str("\nFAIL ");
        report.push_str(f);
    }
    let code = if failures.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    (code, report)
}

pub fn run_corpus(path: &std::path::Path) -> (i32, String) {
    match std::fs::read_to_string(path) {
        Ok(src) => run_corpus_source(&src),
        Err(e) => (EXIT_USAGE, format!("--corpus {}: {e}", path.display())),
    }
}
