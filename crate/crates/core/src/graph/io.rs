//! Edge-list and graph6 text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. On output every edge
//! is written with `u < v` and the lines are sorted, so `emit(parse(t))` is a
//! canonical form of `t`. Blank lines and lines starting with `#` are skipped
//! on input.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line_no, "expected two integers"))?;
        tok.parse()
            .map_err(|_| Error::parse(line_no, format!("{tok:?} is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(line_no, "trailing tokens after two integers"));
    }
    Ok((a, b))
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(header_no, header)?;
    if n == 0 {
        return Err(Error::parse(header_no, "graph must have at least one vertex"));
    }
    if n > super::MAX_ORDER {
        return Err(Error::parse(
            header_no,
            format!("order {n} exceeds the supported maximum {}", super::MAX_ORDER),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut count = 0;
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        let (u, v) = two_numbers(line_no, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex out of range 0..{n} in edge {u} {v}"),
            ));
        }
        if u == v {
            return Err(Error::parse(line_no, format!("loop at vertex {u}")));
        }
        if adj[u] >> v & 1 == 1 {
            return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(
            last_line,
            format!("header announces {m} edges but {count} were given"),
        ));
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn graph6_order(bytes: &[u8], line: usize) -> Result<(usize, usize)> {
    let val = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Error::parse(
                line,
                format!("byte {b} outside the graph6 range 63..=126"),
            ))
        }
    };
    match bytes {
        [] => Err(Error::parse(line, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(line, "truncated graph6 order"));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = n << 6 | val(b)?;
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(line, "truncated graph6 order"));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = n << 6 | val(b)?;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((val(*b)?, 1)),
    }
}

fn parse_graph6_at(code: &str, line: usize) -> Result<Graph> {
    let code = code.trim();
    let code = code.strip_prefix(">>graph6<<").unwrap_or(code);
    let bytes = code.as_bytes();
    let (n, skip) = graph6_order(bytes, line)?;
    if n == 0 {
        return Err(Error::parse(line, "graph must have at least one vertex"));
    }
    if n > super::MAX_ORDER {
        return Err(Error::parse(
            line,
            format!("order {n} exceeds the supported maximum {}", super::MAX_ORDER),
        ));
    }
    let body = &bytes[skip..];
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(Error::parse(
            line,
            format!("order {n} needs {need} data bytes, found {}", body.len()),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    // upper triangle, column by column
    for v in 1..n {
        for u in 0..v {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(Error::parse(
                    line,
                    format!("byte {b} outside the graph6 range 63..=126"),
                ));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Decodes a single graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_at(text, 1)
}

/// Decodes one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    content_lines(text)
        .map(|(no, line)| parse_graph6_at(line, no))
        .collect()
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
