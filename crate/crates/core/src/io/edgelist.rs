//! Plain edge lists: a header line `n m`, then `m` lines `u v` (0-indexed).
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing header".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: hline,
            reason: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    let bad = |reason: String| Error::EdgeList { line, reason };
    if fields.len() != 2 {
        return Err(bad(format!("expected two integers, got {l:?}")));
    }
    let mut out = [0; 2];
    for (o, f) in out.iter_mut().zip(&fields) {
        *o = f.parse().map_err(|_| bad(format!("not a nonnegative integer: {f:?}")))?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
