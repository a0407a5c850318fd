//! Text formats for oppositeness matrices and their object labels.
//!
//! Matrix file:
//!
//! ```text
//! %%OppositenessMatrix v1
//! A 2 2 [2] [1] 7 7
//! 0111100
//! ...
//! ```
//!
//! The second line is `family rank q cotypeJ cotypeK nrows ncols`; each
//! following line is one row of `0`/`1` characters without separators.

use crate::error::{Error, Result};
use crate::rootdata::Family;
use crate::weylgroup::TypeSet;

use super::{Flag, IncidenceMatrix};

pub const MAGIC: &str = "%%OppositenessMatrix v1";

pub fn write_matrix(m: &IncidenceMatrix) -> String {
    let mut out = String::with_capacity(m.nrows() * (m.ncols() + 1) + 64);
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!(
        "{} {} {} {} {} {} {}\n",
        m.family,
        m.rank,
        m.q,
        m.cotype_j,
        m.cotype_k,
        m.nrows(),
        m.ncols()
    ));
    for row in m.rows() {
        out.extend(row.iter().map(|&x| if x == 1 { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<IncidenceMatrix> {
    let bad = |msg: &str| Error::MatrixFormat(msg.to_string());
    let mut lines = text.lines();
    if lines.next() != Some(MAGIC) {
        return Err(bad("missing header line"));
    }
    let header = lines.next().ok_or_else(|| bad("missing dimensions line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 7 {
        return Err(bad("dimensions line needs 7 fields"));
    }
    let family = fields[0]
        .chars()
        .next()
        .filter(|_| fields[0].len() == 1)
        .and_then(Family::from_letter)
        .ok_or_else(|| bad("unknown family"))?;
    let num = |s: &str, what: &str| -> Result<u64> {
        s.parse().map_err(|_| Error::MatrixFormat(format!("bad {what} {s:?}")))
    };
    let rank = num(fields[1], "rank")? as usize;
    let q = num(fields[2], "q")?;
    let cotype_j: TypeSet = fields[3].parse().map_err(|_| bad("bad cotypeJ"))?;
    let cotype_k: TypeSet = fields[4].parse().map_err(|_| bad("bad cotypeK"))?;
    let nrows = num(fields[5], "nrows")? as usize;
    let ncols = num(fields[6], "ncols")? as usize;

    let mut rows = Vec::with_capacity(nrows);
    for line in lines {
        if line.is_empty() {
            continue;
        }
        if line.len() != ncols {
            return Err(Error::MatrixFormat(format!(
                "row {} has {} entries, expected {ncols}",
                rows.len(),
                line.len()
            )));
        }
        let row = line
            .bytes()
            .map(|b| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(bad("entries must be 0 or 1")),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(row);
    }
    if rows.len() != nrows {
        return Err(Error::MatrixFormat(format!(
            "found {} rows, expected {nrows}",
            rows.len()
        )));
    }
    IncidenceMatrix::from_rows(family, rank, q, cotype_j, cotype_k, rows)
}

/// One object per line: components separated by ` | `, each written as its
/// canonical matrix with rows separated by `;` and entries by `,`. Entries
/// of GF(p^t) are the integers `Σ c_k p^k` (little-endian in `p`).
pub fn write_labels(labels: &[Flag]) -> String {
    let mut out = String::new();
    for l in labels {
        out.push_str(&l.to_string());
        out.push('\n');
    }
    out
}
