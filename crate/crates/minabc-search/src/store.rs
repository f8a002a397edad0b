use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::search::{Method, SearchError, SearchRecord};

/// Version written into every store line.
pub const STORE_SCHEMA: u64 = 1;

/// Append-only JSON-lines file of [`SearchRecord`]s. Later lines for the
/// same (n, method) supersede earlier ones.
#[derive(Debug)]
pub struct ResultStore {
    path: PathBuf,
    records: Vec<SearchRecord>,
    latest: BTreeMap<(usize, Method), usize>,
}

fn parse_line(line: &str) -> Result<SearchRecord, String> {
    let mut v: Value = serde_json::from_str(line).map_err(|e| format!("not JSON: {e}"))?;
    let obj = v.as_object_mut().ok_or("not a JSON object")?;
    match obj.remove("schema").and_then(|s| s.as_u64()) {
        Some(STORE_SCHEMA) => {}
        Some(other) => return Err(format!("unsupported schema {other}")),
        None => return Err("missing schema field".into()),
    }
    let rec: SearchRecord = serde_json::from_value(v).map_err(|e| format!("bad record: {e}"))?;
    rec.verify()?;
    Ok(rec)
}

impl ResultStore {
    /// Opens the store at `path`, validating every line. A missing file is an
    /// empty store.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, SearchError> {
        let path = path.as_ref().to_path_buf();
        let mut store = ResultStore { path: path.clone(), records: Vec::new(), latest: BTreeMap::new() };
        if !path.exists() {
            return Ok(store);
        }
        let reader = BufReader::new(File::open(&path)?);
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = parse_line(&line).map_err(|reason| SearchError::StoreCorrupt { line: i + 1, reason })?;
            store.remember(rec);
        }
        Ok(store)
    }

    fn remember(&mut self, rec: SearchRecord) {
        self.latest.insert((rec.n, rec.method), self.records.len());
        self.records.push(rec);
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, n: usize, method: Method) -> Option<&SearchRecord> {
        self.latest.get(&(n, method)).map(|&i| &self.records[i])
    }

    /// Current record per (n, method), ordered by n then method.
    pub fn records(&self) -> Vec<&SearchRecord> {
        self.latest.values().map(|&i| &self.records[i]).collect()
    }

    pub fn append(&mut self, rec: &SearchRecord) -> Result<(), SearchError> {
        let mut v = serde_json::to_value(rec).expect("records always serialize");
        v.as_object_mut().unwrap().insert("schema".into(), STORE_SCHEMA.into());
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{v}")?;
        self.remember(rec.clone());
        Ok(())
    }

    /// Writes `n,abc,tree_g6,method` rows for the current records.
    pub fn export_csv<W: Write>(&self, out: W) -> Result<(), SearchError> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| SearchError::Io(e.into());
        w.write_record(["n", "abc", "tree_g6", "method"]).map_err(io)?;
        for r in self.records() {
            w.write_record([r.n.to_string(), format!("{:.12}", r.abc), r.tree_g6.clone(), r.method.to_string()])
                .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}
