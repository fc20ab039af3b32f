//! In-memory store of character tables with optional persistence to a JSON file.
//!
//! File layout (version 1):
//!
//! ```json
//! {"format":"hookchar-character-cache","version":1,
//!  "tables":{"3":{"n":3,"lambdas":[[3],[2,1],[1,1,1]],"mus":[...],"values":[[1,1,1],...]}}}
//! ```
//!
//! Readers ignore fields they do not know, so later writers may add fields without bumping
//! the version. A file with a different `format` tag or a newer `version` is rejected.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::character::{dimension, CharacterEngine, CharacterTable};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Partition;

pub const CACHE_FORMAT: &str = "hookchar-character-cache";
pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    tables: BTreeMap<usize, CharacterTable>,
}

#[derive(Debug, Default)]
pub struct CharacterStore {
    engine: CharacterEngine,
    tables: RwLock<BTreeMap<usize, Arc<CharacterTable>>>,
    dirty: RwLock<bool>,
}

impl CharacterStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads a cache file. A missing file gives an empty store.
    pub fn load(path: &Path) -> Result<Self> {
        let store = CharacterStore::new();
        if !path.exists() {
            return Ok(store);
        }
        let text = std::fs::read_to_string(path)?;
        let file: CacheFile = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if file.format != CACHE_FORMAT {
            return Err(Error::Cache(format!(
                "{}: format tag {:?} is not {CACHE_FORMAT:?}",
                path.display(),
                file.format
            )));
        }
        if file.version > CACHE_VERSION {
            return Err(Error::Cache(format!(
                "{}: version {} is newer than supported version {CACHE_VERSION}",
                path.display(),
                file.version
            )));
        }
        let mut tables = BTreeMap::new();
        for (n, table) in file.tables {
            if table.n() != n {
                return Err(Error::Cache(format!(
                    "table stored under key {n} has n={}",
                    table.n()
                )));
            }
            check_degrees(&table)?;
            tables.insert(n, Arc::new(table));
        }
        *store.tables.write().unwrap() = tables;
        Ok(store)
    }

    /// Writes every table currently held, via a temporary file and a rename.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tables = self.tables.read().unwrap();
        let file = CacheFile {
            format: CACHE_FORMAT.to_string(),
            version: CACHE_VERSION,
            tables: tables.iter().map(|(&n, t)| (n, (**t).clone())).collect(),
        };
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(&file)?)?;
        std::fs::rename(&tmp, path)?;
        *self.dirty.write().unwrap() = false;
        Ok(())
    }

    /// True when a table was computed since the last load or save.
    pub fn is_dirty(&self) -> bool {
        *self.dirty.read().unwrap()
    }

    pub fn cached_sizes(&self) -> Vec<usize> {
        self.tables.read().unwrap().keys().copied().collect()
    }

    pub fn clear(&self) {
        self.tables.write().unwrap().clear();
        *self.dirty.write().unwrap() = true;
    }

    pub fn engine(&self) -> &CharacterEngine {
        &self.engine
    }

    /// The table for n, computing and retaining it on first use.
    pub fn table(&self, n: usize, limits: &Limits) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.read().unwrap().get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(CharacterTable::compute(n, limits, &self.engine)?);
        let mut tables = self.tables.write().unwrap();
        let entry = tables.entry(n).or_insert_with(|| {
            *self.dirty.write().unwrap() = true;
            Arc::clone(&table)
        });
        Ok(Arc::clone(entry))
    }
}

/// Integrity check on load: the identity column must hold the hook-length dimensions.
fn check_degrees(table: &CharacterTable) -> Result<()> {
    let identity = Partition::column(table.n());
    for lambda in table.partitions() {
        let stored = table.get(lambda, &identity).expect("labels are complete");
        if *stored != dimension(lambda) {
            return Err(Error::Cache(format!(
                "table n={}: χ^{lambda}(1^n) is {stored}, expected {}",
                table.n(),
                dimension(lambda)
            )));
        }
    }
    Ok(())
}
