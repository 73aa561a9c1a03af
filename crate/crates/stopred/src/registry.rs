//! Code lookup: registry names (`golay24`, `rs:q,n,k`) or a file path in the
//! `CODE` text format.

use crate::formats;
use stopred_core::codes::{golay24, rs_code, LinearCode};

#[derive(Debug)]
pub enum RegistryError {
    BadSpec(String),
    Io(std::io::Error),
    Format(formats::FormatError),
}

impl std::fmt::Display for RegistryError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegistryError::BadSpec(msg) => write!(f, "bad code reference: {msg}"),
            RegistryError::Io(e) => write!(f, "cannot read code file: {e}"),
            RegistryError::Format(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RegistryError {}

/// Resolves a code reference: `golay24`, `rs:q,n,k`, or a path to a code
/// file.
pub fn resolve_code(spec: &str) -> Result<LinearCode, RegistryError> {
    if spec == "golay24" {
        return Ok(golay24());
    }
    if let Some(params) = spec.strip_prefix("rs:") {
        let parts: Vec<&str> = params.split(',').collect();
        let [q, n, k] = parts[..] else {
            return Err(RegistryError::BadSpec(format!(
                "expected rs:q,n,k, got {spec:?}"
            )));
        };
        let parse = |tok: &str| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| RegistryError::BadSpec(format!("bad number {tok:?}")))
        };
        let (q, n, k) = (parse(q)?, parse(n)?, parse(k)?);
        let q = u32::try_from(q).map_err(|_| RegistryError::BadSpec("q too large".into()))?;
        return rs_code(q, n, k).map_err(|e| RegistryError::BadSpec(e.to_string()));
    }
    let text = std::fs::read_to_string(spec).map_err(RegistryError::Io)?;
    formats::parse_code(&text).map_err(RegistryError::Format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_resolve() {
        assert_eq!(resolve_code("golay24").unwrap().n(), 24);
        let rs = resolve_code("rs:7,7,3").unwrap();
        assert_eq!((rs.n(), rs.k(), rs.q()), (7, 3, 7));
        assert!(resolve_code("rs:7,7").is_err());
        assert!(resolve_code("/nonexistent/code/file").is_err());
    }
}
