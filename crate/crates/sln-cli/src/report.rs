//! Stable report emission: significant-digit rounding for floats, sorted-key
//! JSON rendering, and file writing into the configured output directory.

use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::Failure;

/// Rounds to 12 significant digits so serialized summaries are byte-stable
/// across reruns and platforms.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("rounded float reparses")
}

/// A JSON number rounded to 12 significant digits.
pub fn number(x: f64) -> Value {
    Value::from(sig12(x))
}

/// Pretty JSON with sorted keys (the underlying map is ordered) and a
/// trailing newline.
pub fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON value serializes");
    text.push('\n');
    text
}

/// Writes `contents` to `dir/name`, creating the directory if needed.
pub fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, Failure> {
    std::fs::create_dir_all(dir).map_err(|e| {
        Failure::Usage(format!("cannot create output directory {}: {e}", dir.display()))
    })?;
    let path = dir.join(name);
    std::fs::write(&path, contents)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_significant_digits() {
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(0.5), 0.5);
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(sig12(1.23456789012345e-14), 1.23456789012e-14);
        assert_eq!(sig12(-9.87654321098765e8), -9.87654321099e8);
    }

    #[test]
    fn json_keys_come_out_sorted() {
        let value = serde_json::json!({"zeta": 1, "alpha": 2, "mid": 3});
        let text = render(&value);
        let alpha = text.find("alpha").unwrap();
        let mid = text.find("mid").unwrap();
        let zeta = text.find("zeta").unwrap();
        assert!(alpha < mid && mid < zeta);
    }
}
