//! CSV export of error curves: `run,method,iteration,error`.

use std::fs::File;
use std::io::{BufRead, BufWriter, Write};
use std::path::Path;

use super::experiment::ExperimentResult;
use crate::{Error, Result};

pub const CSV_HEADER: &str = "run,method,iteration,error";

/// One data row as read back from a results file.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub run: u32,
    pub method: String,
    pub iteration: u64,
    pub error: f64,
}

/// Writes rows ordered by run, series and iteration, errors to six decimals.
pub fn write_csv_to<W: Write>(result: &ExperimentResult, mut out: W) -> std::io::Result<()> {
    let mut curves: Vec<_> = result.curves.iter().collect();
    curves.sort_by_key(|c| (c.run, c.series));
    writeln!(out, "{CSV_HEADER}")?;
    for c in curves {
        for &(t, e) in &c.points {
            writeln!(out, "{},{},{},{:.6}", c.run, c.series.name(), t, e)?;
        }
    }
    Ok(())
}

pub fn write_csv(result: &ExperimentResult, path: impl AsRef<Path>) -> Result<()> {
    if result.curves.is_empty() {
        return Err(Error::InvalidConfig("no curves to write".into()));
    }
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_csv_to(result, &mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

pub fn read_csv<R: BufRead>(reader: R) -> Result<Vec<CsvRow>> {
    let mut lines = reader.lines().enumerate();
    let parse_err = |line: usize, message: String| Error::Parse { line, message };
    match lines.next() {
        Some((_, Ok(h))) if h.trim() == CSV_HEADER => {}
        Some((_, Ok(h))) => return Err(parse_err(1, format!("unexpected header {h:?}"))),
        Some((_, Err(e))) => return Err(parse_err(1, e.to_string())),
        None => return Err(parse_err(1, "empty file".into())),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        let n = i + 1;
        let line = line.map_err(|e| parse_err(n, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let [run, method, iteration, error] = fields[..] else {
            return Err(parse_err(
                n,
                format!("expected 4 fields, found {}", fields.len()),
            ));
        };
        rows.push(CsvRow {
            run: run
                .parse()
                .map_err(|_| parse_err(n, format!("bad run {run:?}")))?,
            method: method.to_string(),
            iteration: iteration
                .parse()
                .map_err(|_| parse_err(n, format!("bad iteration {iteration:?}")))?,
            error: error
                .parse()
                .map_err(|_| parse_err(n, format!("bad error {error:?}")))?,
        });
    }
    Ok(rows)
}
