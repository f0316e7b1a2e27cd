//! Flat key=value configuration files for the sweep command.
//!
//! One `key=value` pair per line, `#` starts a comment, blank lines are
//! ignored. Flags always override file values.

use std::collections::BTreeMap;

/// Keys the sweep command understands in a config file.
const SWEEP_KEYS: &[&str] = &[
    "class",
    "param-start",
    "param-stop",
    "param-steps",
    "m",
    "N",
    "mu",
    "lambda",
    "tol",
    "convention",
    "format",
];

/// Parses the flat key=value format, rejecting malformed lines and unknown
/// keys (a misspelled key silently ignored would corrupt a sweep).
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value, got {raw:?}", lineno + 1))?;
        let key = key.trim();
        let value = value.trim();
        if !SWEEP_KEYS.contains(&key) {
            return Err(format!(
                "line {}: unknown key {key:?} (known: {})",
                lineno + 1,
                SWEEP_KEYS.join(", ")
            ));
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(format!("line {}: duplicate key {key:?}", lineno + 1));
        }
    }
    Ok(map)
}

pub fn parse_list_u32(s: &str, what: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| format!("invalid {what} entry {x:?}: {e}"))
        })
        .collect()
}

pub fn parse_list_f64(s: &str, what: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("invalid {what} entry {x:?}: {e}"))
        })
        .collect()
}
