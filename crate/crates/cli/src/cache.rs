// SPDX-License-Identifier: Apache-2.0

//! On-disk cache of complete NCV tables, keyed by metric and topology.
//!
//! Each entry is the ordinary table CSV plus the circuits JSONL, so cached
//! artifacts can be inspected or reused directly.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use ncv_core::search::{CostModel, SynthesisTable};
use ncv_core::{CostMetric, Topology};

use crate::error::CliError;
use crate::format::metric_slug;
use crate::table_io::{read_circuits_jsonl, write_circuits_jsonl, write_table_csv};

pub const DEFAULT_DIR: &str = ".ncv-cache";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// `<metric>_<topology>`, e.g. `ncv-111_full`.
pub fn slug(metric: &CostMetric, topology: Topology) -> String {
    format!("{}_{}", metric_slug(metric), topology.name())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn csv_path(&self, metric: &CostMetric, topology: Topology) -> PathBuf {
        self.dir.join(format!("{}.csv", slug(metric, topology)))
    }

    pub fn jsonl_path(&self, metric: &CostMetric, topology: Topology) -> PathBuf {
        self.dir.join(format!("{}.jsonl", slug(metric, topology)))
    }

    /// The cached table, or `None` when absent or incomplete.
    pub fn load(
        &self,
        metric: &CostMetric,
        topology: Topology,
    ) -> Result<Option<SynthesisTable>, CliError> {
        let path = self.jsonl_path(metric, topology);
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(CliError::io(path, e)),
        };
        let name = path.display().to_string();
        let table = read_circuits_jsonl(
            BufReader::new(file),
            &name,
            CostModel::Ncv(*metric),
            topology,
        )?;
        Ok((table.is_complete() && table.has_witnesses()).then_some(table))
    }

    /// Writes both files, each through a temporary file and a rename.
    pub fn store(&self, table: &SynthesisTable) -> Result<(), CliError> {
        let CostModel::Ncv(metric) = table.model() else {
            return Err(CliError::Usage("only NCV tables are cached".into()));
        };
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let csv_path = self.csv_path(&metric, table.topology());
        write_atomically(&csv_path, |w| {
            write_table_csv(table, w).map_err(|e| std::io::Error::other(e.to_string()))
        })?;
        let jsonl_path = self.jsonl_path(&metric, table.topology());
        write_atomically(&jsonl_path, |w| write_circuits_jsonl(table, w))
    }
}

fn write_atomically(
    path: &Path,
    write: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
) -> Result<(), CliError> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let result = File::create(&tmp).and_then(|f| {
        let mut w = BufWriter::new(f);
        write(&mut w)?;
        w.into_inner().map_err(|e| e.into_error())?.sync_all()
    });
    if let Err(e) = result.and_then(|()| fs::rename(&tmp, path)) {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::io(path, e));
    }
    Ok(())
}
