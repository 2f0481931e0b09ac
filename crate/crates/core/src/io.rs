//! Graph readers for plain edge lists and Matrix Market coordinate files.

use std::collections::HashSet;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, IndexBase};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

/// Reads an edge list: a header line `n m`, then `m` lines `u v`.
/// `#` starts a comment; blank lines are skipped.
pub fn read_edge_list<R: BufRead>(reader: R, base: IndexBase, sanitize: bool) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(
                lineno,
                format!("expected 2 fields, found {}", toks.len()),
            ));
        }
        match header {
            None => {
                let n = parse_usize(toks[0], lineno, "node count")?;
                let m = parse_usize(toks[1], lineno, "edge count")?;
                if n > u32::MAX as usize {
                    return Err(parse_err(lineno, "node count too large"));
                }
                edges.reserve(m.min(1 << 24));
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(parse_err(
                        lineno,
                        format!("more edge lines than the declared {m}"),
                    ));
                }
                let u = parse_usize(toks[0], lineno, "node label")?;
                let v = parse_usize(toks[1], lineno, "node label")?;
                let a = base
                    .to_internal(u, n)
                    .map_err(|e| parse_err(lineno, e.to_string()))?;
                let b = base
                    .to_internal(v, n)
                    .map_err(|e| parse_err(lineno, e.to_string()))?;
                if a == b && !sanitize {
                    return Err(parse_err(lineno, format!("self-loop on node {u}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing 'n m' header line"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_internal_edges(n, edges, sanitize).map_err(|e| match e {
        Error::DuplicateEdge { u, v } => Error::DuplicateEdge {
            u: base.to_external(u),
            v: base.to_external(v),
        },
        other => other,
    })
}

pub fn parse_edge_list(text: &str, base: IndexBase, sanitize: bool) -> Result<Graph> {
    read_edge_list(text.as_bytes(), base, sanitize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    Symmetric,
    General,
}

/// Reads a square Matrix Market coordinate matrix as a graph.
///
/// Off-diagonal structure becomes edges; the diagonal and all values are
/// ignored. `symmetric` files may store either triangle. `general` files
/// must contain every off-diagonal entry together with its mirror.
pub fn read_matrix_market<R: BufRead>(reader: R) -> Result<Graph> {
    let mut lines = reader.lines().enumerate();

    let (_, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let first = first.map_err(|e| parse_err(1, e.to_string()))?;
    let head: Vec<String> = first
        .split_whitespace()
        .map(|t| t.to_ascii_lowercase())
        .collect();
    if head.len() != 5 || head[0] != "%%matrixmarket" || head[1] != "matrix" {
        return Err(parse_err(1, "missing '%%MatrixMarket matrix' header"));
    }
    if head[2] != "coordinate" {
        return Err(Error::Unsupported(format!("'{}' format", head[2])));
    }
    match head[3].as_str() {
        "pattern" | "real" | "integer" | "double" => {}
        other => return Err(Error::Unsupported(format!("'{other}' field"))),
    }
    let symmetry = match head[4].as_str() {
        "symmetric" => Symmetry::Symmetric,
        "general" => Symmetry::General,
        other => return Err(Error::Unsupported(format!("'{other}' symmetry"))),
    };

    let mut size: Option<(usize, usize)> = None;
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let content = line.trim();
        if content.is_empty() || content.starts_with('%') {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match size {
            None => {
                if toks.len() != 3 {
                    return Err(parse_err(lineno, "expected 'rows cols entries'"));
                }
                let rows = parse_usize(toks[0], lineno, "row count")?;
                let cols = parse_usize(toks[1], lineno, "column count")?;
                let nnz = parse_usize(toks[2], lineno, "entry count")?;
                if rows != cols {
                    return Err(Error::Unsupported(format!(
                        "non-square matrix {rows}x{cols}"
                    )));
                }
                entries.reserve(nnz.min(1 << 24));
                size = Some((rows, nnz));
            }
            Some((n, nnz)) => {
                if toks.len() < 2 {
                    return Err(parse_err(lineno, "expected 'row col [value]'"));
                }
                if entries.len() == nnz {
                    return Err(parse_err(lineno, format!("more than {nnz} entries")));
                }
                let i = parse_usize(toks[0], lineno, "row index")?;
                let j = parse_usize(toks[1], lineno, "column index")?;
                let a = IndexBase::One
                    .to_internal(i, n)
                    .map_err(|e| parse_err(lineno, e.to_string()))?;
                let b = IndexBase::One
                    .to_internal(j, n)
                    .map_err(|e| parse_err(lineno, e.to_string()))?;
                entries.push((a, b));
            }
        }
    }
    let (n, nnz) = size.ok_or_else(|| parse_err(0, "missing size line"))?;
    if entries.len() != nnz {
        return Err(parse_err(
            0,
            format!("declared {nnz} entries, found {}", entries.len()),
        ));
    }

    let off_diagonal = entries.into_iter().filter(|(a, b)| a != b);
    let edges: Vec<(usize, usize)> = match symmetry {
        Symmetry::Symmetric => off_diagonal.collect(),
        Symmetry::General => {
            let set: HashSet<(usize, usize)> = off_diagonal.collect();
            for &(a, b) in &set {
                if !set.contains(&(b, a)) {
                    return Err(Error::NotSymmetric {
                        row: a + 1,
                        col: b + 1,
                    });
                }
            }
            set.into_iter().filter(|(a, b)| a < b).collect()
        }
    };
    Graph::from_internal_edges(n, edges, true)
}

pub fn parse_matrix_market(text: &str) -> Result<Graph> {
    read_matrix_market(text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basic() {
        let g = parse_edge_list("4 2\n1 3\n2 4", IndexBase::One, false).unwrap();
        assert_eq!(g.n(), 4);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3));
        let single = parse_edge_list("1 0", IndexBase::One, false).unwrap();
        assert_eq!((single.n(), single.m()), (1, 0));
    }

    #[test]
    fn edge_list_comments_and_zero_base() {
        let text = "# toy\n4 2 # header\n\n0 2\n1 3 # second\n";
        let g = parse_edge_list(text, IndexBase::Zero, false).unwrap();
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3));
    }

    #[test]
    fn edge_list_errors() {
        let err = parse_edge_list("3 1\n1 1", IndexBase::One, false).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "self-loop on node 1".into()
            }
        );
        let g = parse_edge_list("3 1\n1 1", IndexBase::One, true).unwrap();
        assert_eq!(g.m(), 0);

        assert!(matches!(
            parse_edge_list("3 1\n1 x", IndexBase::One, false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 4", IndexBase::One, false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n1 2", IndexBase::One, false),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 2\n2 3", IndexBase::One, false),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n1 2\n2 1", IndexBase::One, false),
            Err(Error::DuplicateEdge { u: 1, v: 2 })
        ));
        assert!(parse_edge_list("# nothing\n", IndexBase::One, false).is_err());
    }

    #[test]
    fn matrix_market_symmetric_pattern() {
        let text = "%%MatrixMarket matrix coordinate pattern symmetric\n% toy\n4 4 2\n3 1\n4 2\n";
        let g = parse_matrix_market(text).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3));
    }

    #[test]
    fn matrix_market_diagonal_only() {
        let text = "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 4.0\n2 2 1.5\n";
        let g = parse_matrix_market(text).unwrap();
        assert_eq!((g.n(), g.m()), (2, 0));
    }

    #[test]
    fn matrix_market_general_needs_mirror() {
        let ok = "%%MatrixMarket matrix coordinate real general\n3 3 3\n1 2 1\n2 1 1\n3 3 1\n";
        assert_eq!(parse_matrix_market(ok).unwrap().m(), 1);
        let bad = "%%MatrixMarket matrix coordinate real general\n3 3 1\n1 2 1\n";
        assert!(matches!(
            parse_matrix_market(bad),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn matrix_market_rejects() {
        let array = "%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n1\n";
        assert!(matches!(
            parse_matrix_market(array),
            Err(Error::Unsupported(_))
        ));
        let rect = "%%MatrixMarket matrix coordinate pattern general\n2 3 0\n";
        assert!(matches!(
            parse_matrix_market(rect),
            Err(Error::Unsupported(_))
        ));
        assert!(parse_matrix_market("garbage").is_err());
        let short = "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n2 1\n";
        assert!(parse_matrix_market(short).is_err());
    }
}
