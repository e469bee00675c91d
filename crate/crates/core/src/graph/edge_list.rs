use std::fmt::Write;

use super::{check_edge, Graph, GraphError};

/// Parses the line-oriented edge-list format.
///
/// One `u v` pair per line with 0-based ids; `#` starts a comment. An
/// optional first line `n <count>` fixes the vertex count so isolated
/// vertices survive; otherwise the count is one more than the largest id.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !seen_content && tokens.first() == Some(&"n") {
            seen_content = true;
            if tokens.len() != 2 {
                return Err(parse_error(line, "expected `n <count>`"));
            }
            let count = tokens[1]
                .parse()
                .map_err(|_| parse_error(line, &format!("invalid vertex count `{}`", tokens[1])))?;
            declared = Some(count);
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(parse_error(line, "expected two vertex ids"));
        }
        let parse_id = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_error(line, &format!("invalid vertex id `{s}`")))
        };
        edges.push((parse_id(tokens[0])?, parse_id(tokens[1])?, line));
    }

    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut adjacency_check = std::collections::HashSet::with_capacity(edges.len());
    for &(u, v, line) in &edges {
        check_edge(u, v, n, Some(line))?;
        if !adjacency_check.insert((u.min(v), u.max(v))) {
            return Err(GraphError::DuplicateEdge {
                line: Some(line),
                u: u.min(v),
                v: u.max(v),
            });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Writes the edge-list format with an `n` header line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_error(line: usize, message: &str) -> GraphError {
    GraphError::Parse {
        line,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = from_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    }

    #[test]
    fn duplicate_edge_is_rejected_with_line() {
        let err = from_edge_list("0 1\n0 1").unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateEdge {
                line: Some(2),
                u: 0,
                v: 1
            }
        );
        assert!(from_edge_list("0 1\n1 0").is_err());
    }

    #[test]
    fn empty_input() {
        let g = from_edge_list("").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
        let g = from_edge_list("# nothing here\n\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn header_keeps_isolated_vertices() {
        let g = from_edge_list("# comment\nn 5\n0 1 # trailing\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 1));
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn errors_report_line_numbers() {
        assert!(matches!(
            from_edge_list("0 1\n1 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            from_edge_list("0 1\n2 2\n"),
            Err(GraphError::SelfLoop {
                line: Some(2),
                vertex: 2
            })
        ));
        assert!(matches!(
            from_edge_list("n 3\n0 1\n1 3\n"),
            Err(GraphError::VertexOutOfRange {
                line: Some(3),
                vertex: 3,
                count: 3
            })
        ));
        assert!(matches!(
            from_edge_list("0 1 2\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn writes_header_and_edges() {
        let g = from_edge_list("n 4\n2 1\n0 1\n").unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "n 4\n0 1\n1 2\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
    }
}
