//! Flat `key = value` files whose keys mirror the long command-line flags.

use std::path::Path;

use crate::error::{io_error, Result, SweepError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

/// Parses `key = value` lines. `#` starts a comment; blank lines are
/// skipped; `_` in keys is read as `-`.
pub fn parse_config(text: &str, origin: &Path) -> Result<Vec<Entry>> {
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(SweepError::Format {
                path: origin.to_path_buf(),
                message: format!("line {}: expected key = value", k + 1),
            });
        };
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if key.is_empty() {
            return Err(SweepError::Format {
                path: origin.to_path_buf(),
                message: format!("line {}: empty key", k + 1),
            });
        }
        entries.push(Entry {
            key,
            value: value.trim().to_string(),
        });
    }
    Ok(entries)
}

pub fn load_config(path: &Path) -> Result<Vec<Entry>> {
    let text = std::fs::read_to_string(path).map_err(io_error(path))?;
    parse_config(&text, path)
}

/// Command-line form of the entries. `flags` lists the keys that take no
/// value: `true` turns them on and `false` leaves them out.
pub fn to_args(entries: &[Entry], flags: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for e in entries {
        if flags.contains(&e.key) {
            if e.value.eq_ignore_ascii_case("true") {
                out.push(format!("--{}", e.key));
            }
        } else {
            out.push(format!("--{}={}", e.key, e.value));
        }
    }
    out
}
