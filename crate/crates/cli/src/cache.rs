//! Character tables persisted as one JSON file.
//!
//! Integers are stored as decimal strings. A file with a different `version`
//! is ignored and overwritten; a file that fails to parse is an error.

use std::collections::BTreeMap;
use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use unidescent::{partitions_of, CharacterCache, CharacterTable, Int, Partition};

use crate::CliError;

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "UNIDESCENT_CACHE";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub labels: Vec<Partition>,
    pub rows: Vec<Vec<String>>,
}

impl TableEntry {
    pub fn from_table(table: &CharacterTable) -> Self {
        TableEntry {
            labels: table.labels().to_vec(),
            rows: table
                .rows()
                .map(|(_, row)| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn to_table(&self, n: usize) -> Result<CharacterTable, String> {
        let expected: Vec<Partition> = partitions_of(n).collect();
        if self.labels != expected {
            return Err(format!(
                "labels for n = {n} are not the partitions of {n} in canonical order"
            ));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.parse::<Int>()
                            .map_err(|e| format!("bad integer {v:?} for n = {n}: {e}"))
                    })
                    .collect::<Result<Vec<Int>, String>>()
            })
            .collect::<Result<Vec<_>, String>>()?;
        CharacterTable::from_rows(n, rows).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub entries: BTreeMap<usize, TableEntry>,
}

impl CacheFile {
    pub fn from_cache(cache: &CharacterCache) -> Self {
        CacheFile {
            version: CACHE_VERSION,
            entries: cache
                .tables()
                .iter()
                .map(|t| (t.n(), TableEntry::from_table(t)))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("cache serializes");
        text.push('\n');
        text
    }
}

/// `$XDG_CONFIG_HOME/unidescent/chartables.json` or the platform equivalent.
pub fn default_path() -> Option<PathBuf> {
    dirs::config_dir().map(|d| d.join("unidescent").join("chartables.json"))
}

/// Loads `path` into a fresh cache. Returns the cache and how many tables
/// came from disk.
pub fn load(path: &Path) -> Result<(CharacterCache, usize), CliError> {
    let cache = CharacterCache::new();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok((cache, 0)),
        Err(e) => return Err(CliError::Cache(format!("reading {}: {e}", path.display()))),
    };
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Cache(format!("{} is not valid JSON: {e}", path.display())))?;
    if value.get("version").and_then(|v| v.as_u64()) != Some(u64::from(CACHE_VERSION)) {
        eprintln!("note: ignoring cache {} (version mismatch)", path.display());
        return Ok((cache, 0));
    }
    let file: CacheFile = serde_json::from_value(value)
        .map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
    let count = file.entries.len();
    for (n, entry) in &file.entries {
        let table = entry
            .to_table(*n)
            .map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
        cache.insert(table);
    }
    Ok((cache, count))
}

pub fn save(path: &Path, cache: &CharacterCache) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Cache(format!("writing {}: {e}", path.display()));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, CacheFile::from_cache(cache).to_json()).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}
