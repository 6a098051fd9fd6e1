//! The SVMlight-style learning-to-rank text format:
//!
//! ```text
//! <grade> qid:<query> <feature>:<value> ... [# comment]
//! ```
//!
//! Feature ids are 1-based; absent features read as 0.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{Dataset, Document, Query};
use crate::{DocumentId, Error, QueryId, Result};

struct Row {
    grade: u8,
    features: Vec<(usize, f64)>,
}

fn parse_line(line: &str, line_no: usize, max_grade: u8) -> Result<Option<(QueryId, Row)>> {
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let data = line.split('#').next().unwrap_or("").trim();
    if data.is_empty() {
        return Ok(None);
    }
    let mut tokens = data.split_whitespace();
    let grade_token = tokens.next().expect("non-empty line has a token");
    let grade: u8 = grade_token.parse().map_err(|_| {
        err(format!(
            "grade {grade_token:?} is not a non-negative integer"
        ))
    })?;
    if grade > max_grade {
        return Err(err(format!("grade {grade} exceeds maximum {max_grade}")));
    }
    let qid_token = tokens.next().ok_or_else(|| err("missing qid".into()))?;
    let qid = qid_token
        .strip_prefix("qid:")
        .and_then(|q| q.parse::<u64>().ok())
        .ok_or_else(|| err(format!("expected qid:<integer>, found {qid_token:?}")))?;
    let mut features = Vec::new();
    for token in tokens {
        let (id, value) = token
            .split_once(':')
            .ok_or_else(|| err(format!("malformed feature {token:?}")))?;
        let id: usize = id
            .parse()
            .map_err(|_| err(format!("malformed feature id in {token:?}")))?;
        if id == 0 {
            return Err(err("feature ids start at 1".into()));
        }
        let value: f64 = value
            .parse()
            .map_err(|_| err(format!("malformed feature value in {token:?}")))?;
        features.push((id, value));
    }
    Ok(Some((QueryId(qid), Row { grade, features })))
}

/// Reads a dataset, grouping documents by query in order of first appearance.
/// Document ids are the within-query ordinals.
pub fn parse_letor<R: BufRead>(reader: R, max_grade: u8) -> Result<Dataset> {
    let mut order: Vec<QueryId> = Vec::new();
    let mut rows: HashMap<QueryId, Vec<Row>> = HashMap::new();
    let mut num_features = 0;
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if let Some((qid, row)) = parse_line(&line, line_no, max_grade)? {
            num_features = row
                .features
                .iter()
                .map(|&(id, _)| id)
                .fold(num_features, usize::max);
            rows.entry(qid)
                .or_insert_with(|| {
                    order.push(qid);
                    Vec::new()
                })
                .push(row);
        }
    }
    if order.is_empty() {
        return Err(Error::NoQueries);
    }
    let queries = order
        .into_iter()
        .map(|qid| {
            let documents = rows
                .remove(&qid)
                .unwrap_or_default()
                .into_iter()
                .enumerate()
                .map(|(d, row)| {
                    let mut features = vec![0.0; num_features];
                    for (id, value) in row.features {
                        features[id - 1] = value;
                    }
                    Document {
                        id: DocumentId(d as u32),
                        features,
                        grade: row.grade,
                    }
                })
                .collect();
            Query { id: qid, documents }
        })
        .collect();
    Dataset::new(queries, num_features, max_grade)
}

pub fn parse_letor_str(text: &str, max_grade: u8) -> Result<Dataset> {
    parse_letor(text.as_bytes(), max_grade)
}

pub fn read_letor_file(path: impl AsRef<Path>, max_grade: u8) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_letor(BufReader::new(file), max_grade)
}

/// Writes every feature explicitly, values in shortest round-trip form.
pub fn write_letor<W: Write>(ds: &Dataset, mut out: W) -> std::io::Result<()> {
    for q in ds.queries() {
        for d in &q.documents {
            write!(out, "{} qid:{}", d.grade, q.id)?;
            for (i, v) in d.features.iter().enumerate() {
                write!(out, " {}:{}", i + 1, v)?;
            }
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn write_letor_file(ds: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_letor(ds, &mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}
