//! Line-oriented text format for multigraphs.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2
//! ```
//!
//! The `n` line comes first; each `e a b` line adds one edge, and line order
//! defines edge indices. Blank lines and `#` lines are ignored.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<usize> = fields
            .map(|f| f.parse::<usize>().map_err(|e| err(format!("bad integer {f:?}: {e}"))))
            .collect::<Result<_>>()?;
        match (tag, n, nums.as_slice()) {
            ("n", None, &[count]) => n = Some(count),
            ("n", Some(_), _) => return Err(err("duplicate vertex-count line".into())),
            ("n", None, _) => return Err(err("expected `n <vertex_count>`".into())),
            ("e", None, _) => return Err(err("edge before vertex-count line".into())),
            ("e", Some(_), &[a, b]) => pairs.push((a, b)),
            ("e", Some(_), _) => return Err(err("expected `e <a> <b>`".into())),
            _ => return Err(err(format!("unknown record {tag:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, message: "missing `n <vertex_count>` line".into() })?;
    Multigraph::new(n, pairs)
}

/// Serializes `g`: the `n` line, then one `e` line per edge in index order,
/// each terminated by LF.
pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(a, b) in g.edges() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# diamond with a doubled diagonal\nn 4\ne 0 1\ne 1 2\n\ne 0 2\ne 0 2\ne 2 3\ne 0 3\n").unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.edges()[3], (0, 2));
        assert_eq!(write_graph(&g), "n 4\ne 0 1\ne 1 2\ne 0 2\ne 0 2\ne 2 3\ne 0 3\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph("e 0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("n 2\ne 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("n 2\nx 0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("n two\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 0, .. })));
        assert_eq!(parse_graph("n 2\ne 1 1\n").unwrap_err(), Error::LoopEdge { index: 0, vertex: 1 });
        assert!(matches!(parse_graph("n 2\ne 0 2\n"), Err(Error::VertexOutOfRange { .. })));
    }

    proptest! {
        #[test]
        fn round_trip_keeps_edge_order(n in 2usize..12, raw in prop::collection::vec((0usize..64, 1usize..64), 0..30)) {
            let pairs: Vec<_> = raw.into_iter().map(|(a, d)| (a % n, (a + d % (n - 1) + 1) % n)).collect();
            let g = Multigraph::new(n, pairs).unwrap();
            let text = write_graph(&g);
            prop_assert_eq!(parse_graph(&text).unwrap(), g);
            prop_assert!(!text.lines().any(|l| l.ends_with(' ')));
        }
    }
}
