//! Text codecs for graphs, bipartite graphs and type sequences.
//!
//! Edge-list format, bit-exact:
//!
//! ```text
//! n m
//! u v        (m lines, 0 <= u < v < n, lexicographically sorted)
//! ```
//!
//! `#` comment lines may precede the header only, line endings are LF.
//! The bipartite variant has header `bipartite l r m` and edges `i j`
//! meaning left `i`, right `j`, also sorted.
//!
//! Type-sequence files hold one type per line as space-separated
//! non-increasing integers; a blank line is the empty type. Output is sorted
//! under the type order; input is accepted in any order.

use thiserror::Error;

use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;
use crate::types::{TypeSequence, VertexType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: bad header: {reason}")]
    BadHeader { line: usize, reason: String },
    #[error("line {line}: comments are only allowed before the header")]
    CommentAfterHeader { line: usize },
    #[error("line {line}: expected `{expected}`, got `{content}`")]
    BadLine {
        line: usize,
        expected: &'static str,
        content: String,
    },
    #[error("line {line}: edge ({u}, {v}) out of range or misordered")]
    BadEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edges must be strictly lexicographically sorted")]
    UnsortedEdges { line: usize },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("line {line}: type entries must be non-increasing")]
    UnsortedTypeEntries { line: usize },
}

/// Lines of `text`, dropping the trailing empty fragment a final LF leaves.
fn lines(text: &str) -> Vec<&str> {
    let mut parts: Vec<&str> = text.split('\n').collect();
    if parts.last() == Some(&"") {
        parts.pop();
    }
    parts
}

fn parse_usize(tok: &str, line: usize, expected: &'static str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::BadLine {
        line,
        expected,
        content: tok.to_string(),
    })
}

struct Header<'a> {
    tokens: Vec<&'a str>,
    /// 1-based line number of the header.
    line: usize,
}

fn split_header(text: &str) -> Result<(Header<'_>, Vec<(usize, &str)>), FormatError> {
    let all = lines(text);
    let mut idx = 0;
    while idx < all.len() && all[idx].starts_with('#') {
        idx += 1;
    }
    if idx >= all.len() {
        return Err(FormatError::MissingHeader);
    }
    let header = Header {
        tokens: all[idx].split_whitespace().collect(),
        line: idx + 1,
    };
    let rest: Vec<(usize, &str)> = all[idx + 1..]
        .iter()
        .enumerate()
        .map(|(k, &s)| (idx + 2 + k, s))
        .collect();
    for &(line, s) in &rest {
        if s.starts_with('#') {
            return Err(FormatError::CommentAfterHeader { line });
        }
    }
    Ok((header, rest))
}

fn parse_edge_lines(
    rest: &[(usize, &str)],
    m: usize,
) -> Result<Vec<(usize, usize)>, FormatError> {
    let mut edges = Vec::with_capacity(m);
    for &(line, s) in rest {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(FormatError::BadLine {
                line,
                expected: "u v",
                content: s.to_string(),
            });
        }
        let u = parse_usize(toks[0], line, "u v")?;
        let v = parse_usize(toks[1], line, "u v")?;
        if let Some(&prev) = edges.last() {
            if prev >= (u, v) {
                return Err(FormatError::UnsortedEdges { line });
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::WrongEdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(edges)
}

/// Parses a graph edge-list document.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let (header, rest) = split_header(text)?;
    if header.tokens.len() != 2 {
        return Err(FormatError::BadHeader {
            line: header.line,
            reason: "expected `n m`".into(),
        });
    }
    let n = parse_usize(header.tokens[0], header.line, "n m")?;
    let m = parse_usize(header.tokens[1], header.line, "n m")?;
    let edges = parse_edge_lines(&rest, m)?;
    let mut g = Graph::new(n);
    for (k, &(u, v)) in edges.iter().enumerate() {
        if u >= v || v >= n {
            return Err(FormatError::BadEdge {
                line: header.line + 1 + k,
                u,
                v,
            });
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Serializes a graph in the edge-list format, byte-reproducibly.
pub fn serialize_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a bipartite edge-list document (`bipartite l r m` header).
pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, FormatError> {
    let (header, rest) = split_header(text)?;
    if header.tokens.len() != 4 || header.tokens[0] != "bipartite" {
        return Err(FormatError::BadHeader {
            line: header.line,
            reason: "expected `bipartite l r m`".into(),
        });
    }
    let l = parse_usize(header.tokens[1], header.line, "bipartite l r m")?;
    let r = parse_usize(header.tokens[2], header.line, "bipartite l r m")?;
    let m = parse_usize(header.tokens[3], header.line, "bipartite l r m")?;
    let edges = parse_edge_lines(&rest, m)?;
    let mut b = BipartiteGraph::new(l, r);
    for (k, &(i, j)) in edges.iter().enumerate() {
        if i >= l || j >= r {
            return Err(FormatError::BadEdge {
                line: header.line + 1 + k,
                u: i,
                v: j,
            });
        }
        b.add_edge(i, j);
    }
    Ok(b)
}

pub fn serialize_bipartite(b: &BipartiteGraph) -> String {
    let edges = b.edges();
    let mut out = format!(
        "bipartite {} {} {}\n",
        b.left_size(),
        b.right_size(),
        edges.len()
    );
    for (i, j) in edges {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Either kind of graph document, detected from the header.
#[derive(Debug, Clone)]
pub enum GraphFile {
    Graph(Graph),
    Bipartite(BipartiteGraph),
}

pub fn parse_any(text: &str) -> Result<GraphFile, FormatError> {
    let (header, _) = split_header(text)?;
    if header.tokens.first() == Some(&"bipartite") {
        parse_bipartite(text).map(GraphFile::Bipartite)
    } else {
        parse_graph(text).map(GraphFile::Graph)
    }
}

/// Parses a type-sequence file. Lines may come in any order; the result is
/// sorted.
pub fn parse_type_sequence(text: &str) -> Result<TypeSequence, FormatError> {
    let mut types = Vec::new();
    for (k, raw) in lines(text).iter().enumerate() {
        let line = k + 1;
        let mut entries = Vec::new();
        for tok in raw.split_whitespace() {
            entries.push(parse_usize(tok, line, "space-separated integers")?);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(FormatError::UnsortedTypeEntries { line });
        }
        types.push(VertexType::new(entries));
    }
    Ok(TypeSequence::new(types))
}

pub fn serialize_type_sequence(ts: &TypeSequence) -> String {
    let mut out = String::new();
    for t in ts.iter() {
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let text = serialize_graph(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn comments_before_header_only() {
        let ok = "# a comment\n3 1\n0 1\n";
        assert!(parse_graph(ok).is_ok());
        let bad = "3 1\n# no\n0 1\n";
        assert_eq!(
            parse_graph(bad).unwrap_err(),
            FormatError::CommentAfterHeader { line: 2 }
        );
    }

    #[test]
    fn rejects_unsorted_and_duplicate_edges() {
        assert!(matches!(
            parse_graph("3 2\n1 2\n0 1\n"),
            Err(FormatError::UnsortedEdges { line: 3 })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n0 1\n"),
            Err(FormatError::UnsortedEdges { line: 3 })
        ));
    }

    #[test]
    fn rejects_misordered_endpoints_and_range() {
        assert!(matches!(parse_graph("3 1\n1 0\n"), Err(FormatError::BadEdge { .. })));
        assert!(matches!(parse_graph("3 1\n0 3\n"), Err(FormatError::BadEdge { .. })));
    }

    #[test]
    fn rejects_wrong_edge_count() {
        assert!(matches!(
            parse_graph("3 2\n0 1\n"),
            Err(FormatError::WrongEdgeCount { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn bipartite_round_trip() {
        let b = BipartiteGraph::from_edges(2, 3, [(0, 0), (0, 2), (1, 1)]);
        let text = serialize_bipartite(&b);
        assert_eq!(text, "bipartite 2 3 3\n0 0\n0 2\n1 1\n");
        assert_eq!(parse_bipartite(&text).unwrap(), b);
    }

    #[test]
    fn detects_kind_from_header() {
        assert!(matches!(parse_any("2 0\n"), Ok(GraphFile::Graph(_))));
        assert!(matches!(
            parse_any("bipartite 1 1 0\n"),
            Ok(GraphFile::Bipartite(_))
        ));
    }

    #[test]
    fn type_sequence_round_trip_with_empty_type() {
        let ts = TypeSequence::new(vec![
            VertexType::new(vec![]),
            VertexType::new(vec![2, 1]),
            VertexType::new(vec![3]),
        ]);
        let text = serialize_type_sequence(&ts);
        assert_eq!(text, "2 1\n3\n\n");
        assert_eq!(parse_type_sequence(&text).unwrap(), ts);
    }

    #[test]
    fn type_sequence_accepts_any_line_order() {
        let a = parse_type_sequence("3\n2 1\n").unwrap();
        let b = parse_type_sequence("2 1\n3\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn type_sequence_rejects_increasing_entries() {
        assert!(matches!(
            parse_type_sequence("1 2\n"),
            Err(FormatError::UnsortedTypeEntries { line: 1 })
        ));
    }
}
