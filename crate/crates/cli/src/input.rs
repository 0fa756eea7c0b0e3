use std::io::BufRead;

use anyhow::{bail, Context, Result};
use graphfix::graph::{graph6_decode, Graph};

/// Decodes one graph6 string, tolerating the optional `>>graph6<<` header.
pub fn parse_graph(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    if s.is_empty() {
        bail!("empty graph6 string");
    }
    graph6_decode(s.as_bytes()).with_context(|| format!("invalid graph6 string {s:?}"))
}

/// Graphs from the given arguments; `-` reads one graph6 string per
/// non-empty line of `stdin`.
pub fn read_graphs(args: &[String], stdin: impl BufRead) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut stdin = Some(stdin);
    for a in args {
        if a == "-" {
            let Some(reader) = stdin.take() else {
                bail!("stdin requested twice");
            };
            for line in reader.lines() {
                let line = line.context("reading stdin")?;
                if !line.trim().is_empty() {
                    out.push(parse_graph(&line)?);
                }
            }
        } else {
            out.push(parse_graph(a)?);
        }
    }
    Ok(out)
}
