//! Read-through file cache for refined tables.
//!
//! When EULERFIRST_CACHE_DIR is set, `table` runs store their CSV body
//! (header plus rows, without the echo line) under
//! `<dir>/refined_<kind>_n<k>_<method>.csv` and later runs reuse it.
//! Cached files are re-parsed and shape-checked before use; anything
//! that does not validate is silently recomputed and overwritten.

use std::fs;
use std::path::PathBuf;

use eulerfirst::arith::Count;

pub const CACHE_ENV: &str = "EULERFIRST_CACHE_DIR";

pub fn cache_path(kind: &str, n: u32, method: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    if dir.is_empty() {
        return None;
    }
    Some(PathBuf::from(dir).join(format!("refined_{kind}_n{n}_{method}.csv")))
}

/// Returns the cached CSV body if it exists and parses into exactly the
/// expected (d, k) grid of counts.
pub fn load(kind: &str, n: u32, method: &str) -> Option<String> {
    let path = cache_path(kind, n, method)?;
    let body = fs::read_to_string(path).ok()?;
    validate(&body, n).then_some(body)
}

pub fn store(kind: &str, n: u32, method: &str, body: &str) {
    let Some(path) = cache_path(kind, n, method) else {
        return;
    };
    if let Some(parent) = path.parent() {
        let _ = fs::create_dir_all(parent);
    }
    // cache failures are not fatal; the table was already computed
    let _ = fs::write(path, body);
}

fn validate(body: &str, n: u32) -> bool {
    let mut lines = body.lines();
    if lines.next() != Some("n,d,k,count") {
        return false;
    }
    let mut expected = (0..n as u64).flat_map(|d| (1..=n as u64).map(move |k| (d, k)));
    for line in lines {
        let mut fields = line.split(',');
        let (Some(fn_), Some(fd), Some(fk), Some(fc), None) = (
            fields.next(),
            fields.next(),
            fields.next(),
            fields.next(),
            fields.next(),
        ) else {
            return false;
        };
        let Some((d, k)) = expected.next() else {
            return false;
        };
        if fn_.parse::<u64>() != Ok(n as u64)
            || fd.parse::<u64>() != Ok(d)
            || fk.parse::<u64>() != Ok(k)
            || fc.parse::<Count>().is_err()
        {
            return false;
        }
    }
    expected.next().is_none()
}
