//! Witness sets found by `mutvis search` for sizes the closed forms do not
//! cover. They are generated artifacts, checked by `mutvis check`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::ProductGraph;
use crate::set::VertexSet;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub set: VertexSet,
}

macro_rules! embedded {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../fixtures/", $name, ".json")))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = embedded![
    "cylinder-P5xC6",
    "cylinder-P6xC7",
    "cylinder-P7xC8",
    "cylinder-P8xC9",
    "cylinder-P9xC10",
    "cylinder-P10xC11",
    "cylinder-P11xC12",
    "torus-C6xC3",
    "torus-C8xC4",
    "torus-C8xC5",
    "torus-C9xC6",
    "torus-C12xC7",
    "torus-C12xC8",
    "torus-C12xC12",
];

/// The fixtures compiled into the crate.
pub fn embedded() -> Vec<Fixture> {
    EMBEDDED
        .iter()
        .map(|(name, text)| Fixture {
            name: (*name).to_string(),
            set: VertexSet::from_json(text).unwrap_or_else(|e| panic!("fixture {name}: {e}")),
        })
        .collect()
}

/// Loads every `*.json` file of `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::input(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let text = fs::read_to_string(&path)
                .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
            let set = VertexSet::from_json(&text)
                .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
            let name = path
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            Ok(Fixture { name, set })
        })
        .collect()
}

/// An embedded witness living exactly on `g` (or on its transpose).
pub fn lookup(g: &ProductGraph) -> Option<VertexSet> {
    embedded().into_iter().find_map(|f| {
        if f.set.graph() == g {
            Some(f.set)
        } else if f.set.graph().transpose() == *g {
            Some(f.set.transpose())
        } else {
            None
        }
    })
}
