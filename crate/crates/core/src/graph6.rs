//! graph6 text codec.
//!
//! A line is `N(n)` followed by the upper-triangle adjacency bits in the
//! order (0,1),(0,2),(1,2),(0,3),...,(n-2,n-1), packed six per byte, each
//! byte offset by 63. `N(n)` is a single byte `n + 63` for `n <= 62`, and
//! `126` followed by three 6-bit groups for larger orders.

use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Graph6Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn check_byte(byte: u8, offset: usize) -> std::result::Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::ByteOutOfRange { byte, offset })
    }
}

fn decode_order(bytes: &[u8]) -> std::result::Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let first = check_byte(first, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let (groups, skip) = if bytes.get(1) == Some(&126) {
        (6, 2)
    } else {
        (3, 1)
    };
    if bytes.len() < skip + groups {
        return Err(Graph6Error::Length {
            n: 0,
            expected: skip + groups,
            found: bytes.len(),
        });
    }
    let mut n = 0usize;
    for (i, &b) in bytes[skip..skip + groups].iter().enumerate() {
        n = n << 6 | check_byte(b, skip + i)? as usize;
    }
    Ok((n, skip + groups))
}

/// Parses one graph6 line; a leading `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, start) = decode_order(bytes)?;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let data = &bytes[start..];
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: data.len(),
        }
        .into());
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: data.len() - expected,
        }
        .into());
    }
    let mut adj = vec![0u64; n];
    let mut pos = 0usize;
    let total = n * n.saturating_sub(1) / 2;
    for (i, &b) in data.iter().enumerate() {
        let six = check_byte(b, start + i)?;
        for bit in 0..6 {
            let set = six >> (5 - bit) & 1 == 1;
            if pos >= total {
                if set {
                    return Err(Graph6Error::NonzeroPadding.into());
                }
                continue;
            }
            if set {
                let (u, v) = pair_at(pos);
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            pos += 1;
        }
    }
    Ok(Graph::from_rows(n, adj))
}

/// Inverse of the column-major pair index: position -> (row, column), row < column.
fn pair_at(pos: usize) -> (usize, usize) {
    let mut v = 1;
    while v * (v + 1) / 2 <= pos {
        v += 1;
    }
    (pos - v * (v - 1) / 2, v)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads every non-blank line of a graph6 stream.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line.trim())?);
    }
    Ok(graphs)
}

pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path)?;
    read_graph6(std::io::BufReader::new(file))
}
