//! Optional `key=value` configuration merged under explicit flags.

use std::collections::BTreeMap;

use crate::UsageError;

pub const KEYS: [&str; 9] = ["field", "alpha", "beta", "gamma", "psi", "cutoff", "out", "jobs", "extended"];

/// Parses `key=value` lines; blank lines and lines starting with `#` are skipped.
pub fn parse(text: &str) -> Result<BTreeMap<String, String>, UsageError> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| UsageError(format!("config line {}: expected key=value", n + 1)))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            return Err(UsageError(format!("config line {}: unknown key {k:?}", n + 1)));
        }
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        let m = parse("# sweep\nfield = Fp:5\ncutoff=1000\n\n").unwrap();
        assert_eq!(m["field"], "Fp:5");
        assert_eq!(m["cutoff"], "1000");
        assert!(parse("colour=red").is_err());
        assert!(parse("field").is_err());
    }
}
