//! Group files, the built-in catalog, the batch runner and report records
//! behind the `fusion` command line.

pub mod batch;
pub mod catalog;
pub mod groupfile;
pub mod report;

use std::path::Path;

use thiserror::Error;

pub use batch::{run_batch, BatchOutcome, BatchSpec, Check, FamilyTag, PrimeSelection};
pub use groupfile::{GroupFile, GroupFileError};

#[derive(Debug, Error)]
pub enum ResolveError {
    #[error("`{0}` is neither a catalog group nor a readable file")]
    NotFound(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: GroupFileError },
}

/// Resolves a catalog name, falling back to a group file path.
pub fn resolve_group(name: &str) -> Result<GroupFile, ResolveError> {
    if let Some(g) = catalog::lookup(name) {
        return Ok(g);
    }
    let path = Path::new(name);
    let text = std::fs::read_to_string(path).map_err(|_| ResolveError::NotFound(name.to_string()))?;
    let mut file = GroupFile::parse(&text).map_err(|source| ResolveError::Parse { path: name.to_string(), source })?;
    if file.name.is_empty() {
        file.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| name.to_string());
    }
    Ok(file)
}
