use std::path::Path;

use cotangent_gcs::catalog::{self, parse_assignment};
use cotangent_gcs::gcs::GCSCandidate;
use cotangent_gcs::io::{AlgebraFile, AlgebraRef, Params, StructureFile};
use cotangent_gcs::lie::LieAlgebra;

/// An algebra with the parameter values it was built at.
pub struct Resolved {
    pub name: String,
    pub params: Params,
    pub algebra: LieAlgebra,
}

pub fn parse_params(raw: &[String]) -> Result<Params, String> {
    let mut out = Params::new();
    for r in raw {
        let p = parse_assignment(r).map_err(|e| format!("--param {r:?}: {e}"))?;
        out.extend(p);
    }
    Ok(out)
}

/// Catalog entry, then table row, then algebra file. Missing parameters
/// default to the first sample of the entry or row.
pub fn algebra(name: &str, given: &Params) -> Result<Resolved, String> {
    if let Ok(e) = catalog::entry(name) {
        let mut params = e.samples().into_iter().next().unwrap_or_default();
        params.retain(|k, _| !given.contains_key(k));
        params.extend(given.clone());
        let algebra = e.instantiate(&params).map_err(|e| e.to_string())?;
        return Ok(Resolved { name: name.to_string(), params, algebra });
    }
    if let Ok(r) = catalog::row(name) {
        let mut params = r.samples().into_iter().next().unwrap_or_default();
        params.retain(|k, _| !given.contains_key(k));
        params.extend(given.clone());
        let algebra = r.algebra(&params).map_err(|e| e.to_string())?;
        return Ok(Resolved { name: name.to_string(), params, algebra });
    }
    let path = Path::new(name);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{name}: {e}"))?;
        let file: AlgebraFile = serde_json::from_str(&text).map_err(|e| format!("{name}: {e}"))?;
        let algebra = file.instantiate(given).map_err(|e| e.to_string())?;
        return Ok(Resolved { name: file.name, params: given.clone(), algebra });
    }
    Err(format!("unknown algebra {name:?} (see `gcs list`)"))
}

/// Reads a structure file and the algebra it lives on. `--algebra` must
/// agree with a name recorded in the file.
pub fn structure(algebra_arg: Option<&str>, path: &Path, raw: &[String]) -> Result<(Resolved, GCSCandidate), String> {
    let shown = path.display();
    let text = std::fs::read_to_string(path).map_err(|e| format!("{shown}: {e}"))?;
    let file: StructureFile = serde_json::from_str(&text).map_err(|e| format!("{shown}: {e}"))?;
    file.check_convention().map_err(|e| e.to_string())?;
    let mut params = file.params().map_err(|e| e.to_string())?;
    params.extend(parse_params(raw)?);
    let res = match (&file.algebra, algebra_arg) {
        (AlgebraRef::Named(n), Some(a)) if n != a => {
            return Err(format!("structure is for {n:?}, not {a:?}"));
        }
        (_, Some(a)) => algebra(a, &params)?,
        (AlgebraRef::Named(n), None) => algebra(n, &params)?,
        (AlgebraRef::Inline(f), None) => Resolved {
            name: f.name.clone(),
            algebra: f.instantiate(&params).map_err(|e| e.to_string())?,
            params: params.clone(),
        },
    };
    let m = file.matrix(&res.params).map_err(|e| e.to_string())?;
    let j = GCSCandidate::new(m).map_err(|e| e.to_string())?;
    Ok((res, j))
}
