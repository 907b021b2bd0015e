//! On-disk cache of differential ranks.
//!
//! One file, `ranks.csv`, of lines `variety;bundle;i;j;prime;dim;rank;version`.
//! New records are buffered and appended by [`RankCache::flush`], which
//! rewrites the file through a temporary file and an atomic rename.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::betti::RankStore;
use crate::error::{Result, SyzygyError};
use crate::exactla::PrimeField;
use crate::variety::{DivisorClass, SurfaceModel};

pub const CACHE_FILE: &str = "ranks.csv";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheRecord {
    pub variety: String,
    pub bundle: String,
    pub i: usize,
    pub j: usize,
    pub prime: u64,
    pub dim: u64,
    pub rank: u64,
    pub version: String,
}

type Key = (String, String, usize, usize, u64, String);

impl CacheRecord {
    fn key(&self) -> Key {
        (self.variety.clone(), self.bundle.clone(), self.i, self.j, self.prime, self.version.clone())
    }

    pub fn to_line(&self) -> String {
        format!(
            "{};{};{};{};{};{};{};{}",
            self.variety, self.bundle, self.i, self.j, self.prime, self.dim, self.rank, self.version
        )
    }

    pub fn parse(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split(';').collect();
        if f.len() != 8 {
            return Err(SyzygyError::Parse(format!("cache line has {} fields: {line}", f.len())));
        }
        let num = |s: &str| s.parse::<u64>().map_err(|_| SyzygyError::Parse(format!("bad number {s:?} in cache line")));
        Ok(CacheRecord {
            variety: f[0].to_string(),
            bundle: f[1].to_string(),
            i: num(f[2])? as usize,
            j: num(f[3])? as usize,
            prime: num(f[4])?,
            dim: num(f[5])?,
            rank: num(f[6])?,
            version: f[7].to_string(),
        })
    }
}

pub struct RankCache {
    path: PathBuf,
    known: HashMap<Key, CacheRecord>,
    pending: Mutex<Vec<CacheRecord>>,
}

impl RankCache {
    /// Loads `dir/ranks.csv`, creating `dir` if needed. Malformed lines are skipped.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| SyzygyError::Io(format!("cache dir {}: {e}", dir.display())))?;
        let path = dir.join(CACHE_FILE);
        let mut known = HashMap::new();
        if let Ok(text) = fs::read_to_string(&path) {
            for rec in text.lines().filter(|l| !l.trim().is_empty()).filter_map(|l| CacheRecord::parse(l).ok()) {
                known.entry(rec.key()).or_insert(rec);
            }
        }
        Ok(RankCache { path, known, pending: Mutex::new(Vec::new()) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.known.len()
    }

    pub fn is_empty(&self) -> bool {
        self.known.is_empty()
    }

    /// A [`RankStore`] view for one `(model, D)`.
    pub fn view(&self, model: &SurfaceModel, class: &DivisorClass) -> CacheView<'_> {
        CacheView { cache: self, variety: model.to_string(), bundle: class.to_string() }
    }

    /// Appends buffered records not yet on disk.
    pub fn flush(&mut self) -> Result<()> {
        let pending = std::mem::take(&mut *self.pending.lock().expect("cache poisoned"));
        let mut fresh = Vec::new();
        for rec in pending {
            if let Entry::Vacant(slot) = self.known.entry(rec.key()) {
                slot.insert(rec.clone());
                fresh.push(rec);
            }
        }
        if fresh.is_empty() {
            return Ok(());
        }
        let io = |e: std::io::Error| SyzygyError::Io(format!("cache write {}: {e}", self.path.display()));
        let existing = fs::read(&self.path).unwrap_or_default();
        let dir = self.path.parent().unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
        tmp.write_all(&existing).map_err(io)?;
        if !existing.is_empty() && !existing.ends_with(b"\n") {
            tmp.write_all(b"\n").map_err(io)?;
        }
        for rec in &fresh {
            writeln!(tmp, "{}", rec.to_line()).map_err(io)?;
        }
        tmp.persist(&self.path).map_err(|e| io(e.error))?;
        Ok(())
    }
}

pub struct CacheView<'a> {
    cache: &'a RankCache,
    variety: String,
    bundle: String,
}

impl RankStore for CacheView<'_> {
    fn get(&self, i: usize, j: usize, prime: PrimeField) -> Option<u64> {
        let key = (self.variety.clone(), self.bundle.clone(), i, j, prime.modulus(), TOOL_VERSION.to_string());
        self.cache.known.get(&key).map(|r| r.rank)
    }

    fn put(&self, i: usize, j: usize, prime: PrimeField, dim: u64, rank: u64) {
        self.cache.pending.lock().expect("cache poisoned").push(CacheRecord {
            variety: self.variety.clone(),
            bundle: self.bundle.clone(),
            i,
            j,
            prime: prime.modulus(),
            dim,
            rank,
            version: TOOL_VERSION.to_string(),
        });
    }
}
