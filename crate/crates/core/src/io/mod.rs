//! Text formats: graph6, edge lists, and witness / report JSON.

pub mod edgelist;
pub mod graph6;
pub mod json;

use crate::error::Result;
use crate::graph::Graph;

pub use edgelist::{read_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

/// Parses `text` as `format`, or guesses: a first line containing
/// whitespace is an edge list header, anything else is graph6.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph> {
    let format = format.unwrap_or_else(|| {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        if first.contains(char::is_whitespace) {
            GraphFormat::Edges
        } else {
            GraphFormat::Graph6
        }
    });
    match format {
        GraphFormat::Graph6 => decode_graph6(text),
        GraphFormat::Edges => read_edge_list(text),
    }
}
