use std::fmt::Write;
use std::path::Path;

use blockmax_core::{sample, FamilyParams};

use crate::{write_atomic, Result};

/// One value per line, shortest representation that parses back exactly.
pub fn simulation_csv(params: &FamilyParams, n: usize, seed: u64) -> Result<String> {
    let s = sample(params, n, seed)?;
    let mut out = String::with_capacity(n * 20);
    for v in s.values() {
        let _ = writeln!(out, "{v}");
    }
    Ok(out)
}

/// Draws `n` values from `params` with `seed` and writes them to `path`.
pub fn simulate_to_file(params: &FamilyParams, n: usize, seed: u64, path: &Path) -> Result<()> {
    let body = simulation_csv(params, n, seed)?;
    write_atomic(path, body.as_bytes())
}
