//! Append-only record log plus an atomically replaced cursor file.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{SearchError, SearchRecord};

pub const RECORDS_FILE: &str = "records.jsonl";
pub const CURSOR_FILE: &str = "cursor.json";

/// Progress marker: every chunk before `next_chunk` is reflected in the first
/// `records` lines of the record log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cursor {
    pub source: String,
    pub n: usize,
    pub psi: usize,
    pub next_chunk: usize,
    pub records: usize,
    pub graphs_examined: u64,
    pub candidates_examined: u64,
}

#[derive(Debug)]
pub struct Checkpoint {
    dir: PathBuf,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> SearchError {
    SearchError::Io(format!("{}: {e}", path.display()))
}

impl Checkpoint {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, SearchError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
        Ok(Checkpoint { dir })
    }

    fn records_path(&self) -> PathBuf {
        self.dir.join(RECORDS_FILE)
    }

    fn cursor_path(&self) -> PathBuf {
        self.dir.join(CURSOR_FILE)
    }

    /// The saved cursor and its records, or `None` for a fresh directory.
    /// Record lines past the cursor's count are discarded from the log.
    pub fn load(&self) -> Result<Option<(Cursor, Vec<SearchRecord>)>, SearchError> {
        let cpath = self.cursor_path();
        if !cpath.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&cpath).map_err(|e| io_err(&cpath, e))?;
        let cursor: Cursor = serde_json::from_str(&text).map_err(|e| io_err(&cpath, e))?;
        let rpath = self.records_path();
        let mut records = Vec::with_capacity(cursor.records);
        if cursor.records > 0 {
            let file = File::open(&rpath).map_err(|e| io_err(&rpath, e))?;
            for line in BufReader::new(file).lines().take(cursor.records) {
                let line = line.map_err(|e| io_err(&rpath, e))?;
                records.push(serde_json::from_str(&line).map_err(|e| io_err(&rpath, e))?);
            }
            if records.len() != cursor.records {
                return Err(io_err(
                    &rpath,
                    format!(
                        "expected {} records, found {}",
                        cursor.records,
                        records.len()
                    ),
                ));
            }
        }
        self.rewrite_records(&records)?;
        Ok(Some((cursor, records)))
    }

    fn rewrite_records(&self, records: &[SearchRecord]) -> Result<(), SearchError> {
        let path = self.records_path();
        let tmp = self.dir.join(format!("{RECORDS_FILE}.tmp"));
        let mut out = File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
        for r in records {
            let line = serde_json::to_string(r).map_err(|e| io_err(&tmp, e))?;
            writeln!(out, "{line}").map_err(|e| io_err(&tmp, e))?;
        }
        out.sync_all().map_err(|e| io_err(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| io_err(&path, e))
    }

    /// Clears any previous state.
    pub fn reset(&self) -> Result<(), SearchError> {
        for p in [self.cursor_path(), self.records_path()] {
            if p.exists() {
                fs::remove_file(&p).map_err(|e| io_err(&p, e))?;
            }
        }
        Ok(())
    }

    pub fn append(&self, records: &[SearchRecord]) -> Result<(), SearchError> {
        let path = self.records_path();
        let mut out = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(|e| io_err(&path, e))?;
        for r in records {
            let line = serde_json::to_string(r).map_err(|e| io_err(&path, e))?;
            writeln!(out, "{line}").map_err(|e| io_err(&path, e))?;
        }
        out.sync_all().map_err(|e| io_err(&path, e))
    }

    pub fn write_cursor(&self, cursor: &Cursor) -> Result<(), SearchError> {
        let path = self.cursor_path();
        let tmp = self.dir.join(format!("{CURSOR_FILE}.tmp"));
        let text = serde_json::to_string_pretty(cursor).map_err(|e| io_err(&tmp, e))?;
        fs::write(&tmp, text).map_err(|e| io_err(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| io_err(&path, e))
    }
}
