//! Text serializations: graph6, a line-oriented edge list, and DIMACS `.col`.
//!
//! graph6 follows the standard encoding: a size header `N(n)` followed by the
//! upper triangle of the adjacency matrix, column by column, packed six bits
//! per printable byte (value + 63), big-endian within each byte.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{pair_count, Graph, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    EdgeList,
    Dimacs,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edge_list",
            Format::Dimacs => "dimacs",
        }
    }

    /// Best guess from content: DIMACS if the first meaningful line starts
    /// with `p` or `c`, edge list if it is a bare integer, graph6 otherwise.
    pub fn sniff(text: &str) -> Format {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => Format::Dimacs,
            Some(l)
                if l.split('#')
                    .next()
                    .unwrap_or("")
                    .trim()
                    .parse::<usize>()
                    .is_ok() =>
            {
                Format::EdgeList
            }
            _ => Format::Graph6,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edge_list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

pub fn parse(format: Format, text: &str) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn emit(format: Format, g: &Graph) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
        Format::Dimacs => to_dimacs(g),
    }
}

const G6: &str = "graph6";
const G6_HEADER: &str = ">>graph6<<";

/// graph6 string without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + pair_count(n).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses one graph6 string; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((line_idx, raw)) = lines.next() else {
        return Err(Error::parse(G6, 1, 1, "empty input"));
    };
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(
            G6,
            extra + 1,
            1,
            "more than one graph in input",
        ));
    }
    let line = line_idx + 1;
    let lead = raw.len() - raw.trim_start().len();
    let mut body = raw.trim();
    let mut offset = lead;
    if let Some(rest) = body.strip_prefix(G6_HEADER) {
        body = rest;
        offset += G6_HEADER.len();
    }
    let bytes = body.as_bytes();
    let col = |i: usize| offset + i + 1;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                G6,
                line,
                col(i),
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(Error::parse(G6, line, col(0), "missing size header")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(Error::parse(
                    G6,
                    line,
                    col(bytes.len()),
                    "truncated 8-byte size header",
                ));
            }
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 8)
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(Error::parse(
                    G6,
                    line,
                    col(bytes.len()),
                    "truncated 4-byte size header",
                ));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(Error::parse(
            G6,
            line,
            col(0),
            format!("order {n} exceeds the cap of {MAX_ORDER}"),
        ));
    }
    let data = &bytes[header_len..];
    let needed = pair_count(n).div_ceil(6);
    if data.len() < needed {
        return Err(Error::parse(
            G6,
            line,
            col(bytes.len()),
            format!(
                "truncated bit field: {} of {needed} data bytes for order {n}",
                data.len()
            ),
        ));
    }
    if data.len() > needed {
        return Err(Error::parse(
            G6,
            line,
            col(header_len + needed),
            format!("{} trailing bytes after the bit field", data.len() - needed),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

const EL: &str = "edge_list";

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn column_of(raw: &str, token: &str) -> usize {
    token.as_ptr() as usize - raw.as_ptr() as usize + 1
}

/// First meaningful line is the vertex count; each later line is `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let number = |tok: &str| {
            tok.parse::<usize>().map_err(|_| {
                Error::parse(
                    EL,
                    line,
                    column_of(raw, tok),
                    format!("expected a non-negative integer, found `{tok}`"),
                )
            })
        };
        match order {
            None => {
                if tokens.len() != 1 {
                    return Err(Error::parse(
                        EL,
                        line,
                        column_of(raw, tokens[1]),
                        "header must be a single vertex count",
                    ));
                }
                let n = number(tokens[0])?;
                if n > MAX_ORDER {
                    return Err(Error::parse(
                        EL,
                        line,
                        column_of(raw, tokens[0]),
                        format!("order {n} exceeds the cap of {MAX_ORDER}"),
                    ));
                }
                order = Some(n);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    let at = tokens.get(2).copied().unwrap_or(tokens[0]);
                    return Err(Error::parse(
                        EL,
                        line,
                        column_of(raw, at),
                        format!("expected `u v`, found {} fields", tokens.len()),
                    ));
                }
                let (u, v) = (number(tokens[0])?, number(tokens[1])?);
                for (x, tok) in [(u, tokens[0]), (v, tokens[1])] {
                    if x >= n {
                        return Err(Error::parse(
                            EL,
                            line,
                            column_of(raw, tok),
                            format!("vertex {x} out of range for order {n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(
                        EL,
                        line,
                        column_of(raw, tokens[0]),
                        format!("loop edge ({u}, {v})"),
                    ));
                }
                edges.push((u, v));
            }
        }
    }
    let n = order.ok_or_else(|| Error::parse(EL, 1, 1, "missing vertex count header"))?;
    Graph::build(n, edges)
}

const DIM: &str = "dimacs";

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// `p edge n m` header, `e u v` lines with 1-based vertices, `c` comments.
/// Repeated edges (some benchmark files list both directions) collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&kind) = tokens.first() else {
            continue;
        };
        let number = |tok: &str| {
            tok.parse::<usize>().map_err(|_| {
                Error::parse(
                    DIM,
                    line,
                    column_of(raw, tok),
                    format!("expected a non-negative integer, found `{tok}`"),
                )
            })
        };
        match kind {
            "c" => {}
            "p" => {
                if order.is_some() {
                    return Err(Error::parse(
                        DIM,
                        line,
                        column_of(raw, kind),
                        "duplicate problem line",
                    ));
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "col") {
                    return Err(Error::parse(
                        DIM,
                        line,
                        column_of(raw, kind),
                        "malformed header, expected `p edge n m`",
                    ));
                }
                let n = number(tokens[2])?;
                number(tokens[3])?;
                if n > MAX_ORDER {
                    return Err(Error::parse(
                        DIM,
                        line,
                        column_of(raw, tokens[2]),
                        format!("order {n} exceeds the cap of {MAX_ORDER}"),
                    ));
                }
                order = Some(n);
            }
            "e" => {
                let Some(n) = order else {
                    return Err(Error::parse(
                        DIM,
                        line,
                        column_of(raw, kind),
                        "edge line before the `p edge` header",
                    ));
                };
                if tokens.len() != 3 {
                    return Err(Error::parse(
                        DIM,
                        line,
                        column_of(raw, kind),
                        "expected `e u v`",
                    ));
                }
                let (u, v) = (number(tokens[1])?, number(tokens[2])?);
                for (x, tok) in [(u, tokens[1]), (v, tokens[2])] {
                    if x == 0 || x > n {
                        return Err(Error::parse(
                            DIM,
                            line,
                            column_of(raw, tok),
                            format!("vertex {x} out of range 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(
                        DIM,
                        line,
                        column_of(raw, tokens[1]),
                        format!("loop edge ({u}, {v})"),
                    ));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(Error::parse(
                    DIM,
                    line,
                    column_of(raw, other),
                    format!("unknown line type `{other}`"),
                ));
            }
        }
    }
    let n = order.ok_or_else(|| Error::parse(DIM, 1, 1, "missing `p edge n m` header"))?;
    Graph::build(n, edges)
}
