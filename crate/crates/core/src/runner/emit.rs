//! CSV and JSON output.
//!
//! CSV columns are `cycle,observable,index,value`; `index` is empty for
//! scalar observables. Floats use the shortest decimal that round-trips.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::config::OutputFormat;
use super::run::RunManifest;
use crate::{Error, Result};

pub const CSV_HEADER: &str = "cycle,observable,index,value";

pub fn write_csv<W: Write>(manifest: &RunManifest, mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in &manifest.records {
        match r.index {
            Some(i) => writeln!(w, "{},{},{},{}", r.cycle, r.observable, i, r.value)?,
            None => writeln!(w, "{},{},,{}", r.cycle, r.observable, r.value)?,
        }
    }
    w.flush()
}

pub fn write_json<W: Write>(manifest: &RunManifest, mut w: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut w, manifest)?;
    writeln!(w)?;
    w.flush()
}

pub fn to_csv_string(manifest: &RunManifest) -> String {
    let mut buf = Vec::new();
    write_csv(manifest, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

pub fn write_to<W: Write>(manifest: &RunManifest, format: OutputFormat, w: W) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(manifest, w),
        OutputFormat::Json => write_json(manifest, w),
    }
}

/// Writes to `destination`, or standard output when `None`.
pub fn emit(manifest: &RunManifest, format: OutputFormat, destination: Option<&Path>) -> Result<()> {
    match destination {
        Some(path) => {
            let io = |source| Error::Io {
                path: path.to_path_buf(),
                source,
            };
            let file = File::create(path).map_err(io)?;
            write_to(manifest, format, BufWriter::new(file)).map_err(io)
        }
        None => {
            let stdout = std::io::stdout();
            write_to(manifest, format, stdout.lock()).map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}
