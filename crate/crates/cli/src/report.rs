use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use betti_core::io::write_facets;
use betti_core::SimplicialComplex;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Everything printed on stdout. Key order is fixed and nothing here
/// depends on time, so equal invocations print equal bytes.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// Consistency checks; any `false` makes the exit code nonzero.
    pub checks: BTreeMap<String, bool>,
    #[serde(skip)]
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            checks: BTreeMap::new(),
            ok: true,
        }
    }

    pub fn check(mut self, name: &str, ok: bool) -> Self {
        self.ok &= ok;
        self.checks.insert(name.to_string(), ok);
        self
    }
}

pub struct InputFile {
    pub text: String,
    pub digest: Value,
}

pub fn read_input(path: &Path) -> Result<InputFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let hash = Sha256::digest(text.as_bytes());
    let digest = json!({
        "path": path.display().to_string(),
        "sha256": format!("{hash:x}"),
    });
    Ok(InputFile { text, digest })
}

/// Facets as sorted vertex lists, in the order of `SimplicialComplex::facets`.
pub fn facets_json(complex: &SimplicialComplex) -> Value {
    let mut facets: Vec<Vec<usize>> = complex.facets().into_iter().map(|f| f.vertices().collect()).collect();
    facets.sort();
    json!(facets)
}

pub fn write_out(path: Option<&Path>, complex: &SimplicialComplex, labels: Option<&[String]>) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, write_facets(complex, labels)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
