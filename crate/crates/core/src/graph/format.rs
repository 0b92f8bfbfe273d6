use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Standard graph6 encoding (no header).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(byte + 63);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}

/// Decodes graph6, accepting an optional `>>graph6<<` header and
/// surrounding whitespace. Errors carry the byte offset of the problem.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + k,
                format!("byte {b:#04x} is not graph6"),
            ));
        }
    }
    let six = |k: usize| (bytes[k] - 63) as usize;
    let (n, mut pos) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::parse(base + bytes.len(), "truncated vertex count"));
        }
        ((2..8).fold(0, |acc, k| acc << 6 | six(k)), 8)
    } else {
        if bytes.len() < 4 {
            return Err(Error::parse(base + bytes.len(), "truncated vertex count"));
        }
        ((1..4).fold(0, |acc, k| acc << 6 | six(k)), 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::parse(
            base + pos.min(bytes.len()),
            format!(
                "expected {needed} adjacency bytes for {n} vertices, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = six(pos + k / 6);
            if b >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += needed;
    if bits % 6 != 0 {
        let last = six(pos - 1);
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::parse(base + pos - 1, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `n <count>` then one `u v` line per edge, `u < v`, sorted.
pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn edge_list_decode(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let line_offset = offset;
        offset += line.len() + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::parse(line_offset, "expected `n <count>`"));
                }
                n =
                    Some(fields[1].parse::<usize>().map_err(|_| {
                        Error::parse(line_offset, "vertex count is not an integer")
                    })?);
            }
            Some(count) => {
                let parsed: Vec<Option<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
                match parsed.as_slice() {
                    [Some(u), Some(v)] if *u < count && *v < count && u != v => {
                        edges.push((*u, *v))
                    }
                    _ => return Err(Error::parse(line_offset, "expected an edge `u v`")),
                }
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `n <count>` line"))?;
    Graph::from_edges(n, &edges)
}
