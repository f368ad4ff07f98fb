use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use pqcolor::graph::format::{self, Format};
use pqcolor::Graph;

/// Reads a file, or standard input for `None` and `-`.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            Ok(text)
        }
    }
}

/// Parses a graph, sniffing the format when none is given.
pub fn read_graph(path: Option<&Path>, format: Option<Format>) -> Result<(Graph, Format)> {
    let text = read_text(path)?;
    let format = format.unwrap_or_else(|| Format::sniff(&text));
    let g = format::parse(format, &text).with_context(|| match path {
        Some(p) => format!("parsing {}", p.display()),
        None => "parsing standard input".to_string(),
    })?;
    Ok((g, format))
}

/// Writes `text` plus a final newline to a file, or standard output for
/// `None` and `-`.
pub fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))
        }
        _ => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

pub fn write_graph(path: Option<&Path>, format: Format, g: &Graph) -> Result<()> {
    write_text(path, &format::emit(format, g))
}
