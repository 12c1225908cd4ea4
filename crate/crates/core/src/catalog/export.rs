use std::fs;
use std::path::{Path, PathBuf};

use crate::catalog::{entries, rows};
use crate::error::Result;
use crate::io::{AlgebraRef, StructureFile};

fn slug(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            'a'..='z' | 'A'..='Z' | '0'..='9' => out.push(ch),
            '\'' => out.push('p'),
            '-' => out.push('m'),
            '/' => out.push_str("_over_"),
            _ => {
                if !out.ends_with('_') {
                    out.push('_')
                }
            }
        }
    }
    out.trim_matches('_').to_string()
}

/// Writes `algebras/<name>.json` for every entry and
/// `structures/<row>_type<k>_<n>.json` for every example at every sample.
/// Returns the written paths.
pub fn export(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let alg_dir = dir.join("algebras");
    let st_dir = dir.join("structures");
    fs::create_dir_all(&alg_dir)?;
    fs::create_dir_all(&st_dir)?;
    for e in entries() {
        let path = alg_dir.join(format!("{}.json", slug(e.name())));
        fs::write(&path, serde_json::to_string_pretty(&e.algebra_file())? + "\n")?;
        written.push(path);
    }
    for r in rows() {
        for cell in r.cells() {
            for (n, p) in r.samples().iter().enumerate() {
                let j = r.structure(cell.type_k, p)?;
                let f = StructureFile::new(AlgebraRef::Named(r.entry().name().to_string()), p, j.matrix());
                let path = st_dir.join(format!("{}_type{}_{n}.json", slug(r.label()), cell.type_k));
                fs::write(&path, serde_json::to_string_pretty(&f)? + "\n")?;
                written.push(path);
            }
        }
    }
    Ok(written)
}
