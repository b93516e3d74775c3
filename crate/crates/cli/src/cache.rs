use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bzu_core::census::{CensusOptions, RingReport};
use sha2::{Digest, Sha256};

use crate::document::TOOL_VERSION;

pub const CACHE_ENV: &str = "BZU_CACHE_DIR";

/// Ring reports stored as `<dir>/<tool version>/<sha256 of spec and options>.json`.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `BZU_CACHE_DIR` wins over the command-line directory.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        let env = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
        env.or_else(|| flag.map(Path::to_path_buf)).map(|dir| Cache { dir })
    }

    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    fn path(&self, spec_text: &str, opts: &CensusOptions) -> PathBuf {
        let mut h = Sha256::new();
        h.update(spec_text.as_bytes());
        h.update(b"\n");
        h.update(serde_json::to_vec(opts).unwrap());
        self.dir
            .join(TOOL_VERSION)
            .join(format!("{}.json", hex::encode(h.finalize())))
    }

    pub fn load(&self, spec_text: &str, opts: &CensusOptions) -> Option<RingReport> {
        let bytes = fs::read(self.path(spec_text, opts)).ok()?;
        let report: RingReport = serde_json::from_slice(&bytes).ok()?;
        (report.spec_text == spec_text).then_some(report)
    }

    pub fn store(&self, report: &RingReport, opts: &CensusOptions) -> std::io::Result<()> {
        let path = self.path(&report.spec_text, opts);
        let parent = path.parent().unwrap();
        fs::create_dir_all(parent)?;
        let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
        tmp.write_all(&serde_json::to_vec(report)?)?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }
}
