//! Plain-text hypergraph format: a header line `r n m`, then `m` lines of
//! `r` strictly increasing 0-based vertices, sorted lexicographically.

use std::fmt::Write as _;

use kpsat_core::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("hypergraph parse error on line {line}: {reason}")]
pub struct HyperParseError {
    /// 1-based.
    pub line: usize,
    pub reason: String,
}

pub fn write(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.uniformity(), h.order(), h.edge_count());
    for e in h.edges() {
        let mut first = true;
        for v in e {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>, HyperParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| HyperParseError {
                line: lineno,
                reason: format!("`{tok}` is not a vertex index"),
            })
        })
        .collect()
}

/// Parses the format strictly: counts, ranges, ordering inside and across
/// lines are all checked.
pub fn read(text: &str) -> Result<Hypergraph, HyperParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let bad = |line, reason: String| HyperParseError { line, reason };
    let Some((_, header)) = lines.next() else {
        return Err(bad(1, "missing header line".into()));
    };
    let head = numbers(header, 1)?;
    let &[r, n, m] = head.as_slice() else {
        return Err(bad(1, "header must be `r n m`".into()));
    };
    let mut h = Hypergraph::new(r, n).map_err(|e| bad(1, e.to_string()))?;
    let mut prev: Option<Vec<usize>> = None;
    let mut count = 0;
    for (lineno, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let e = numbers(line, lineno)?;
        if e.len() != r {
            return Err(bad(lineno, format!("expected {r} vertices, found {}", e.len())));
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad(lineno, "vertices must be strictly increasing".into()));
        }
        if prev.as_ref().is_some_and(|p| *p >= e) {
            return Err(bad(lineno, "edges must be strictly increasing in lexicographic order".into()));
        }
        h.add_edge(e.clone()).map_err(|err| bad(lineno, err.to_string()))?;
        prev = Some(e);
        count += 1;
    }
    if count != m {
        return Err(bad(1, format!("header announces {m} edges, found {count}")));
    }
    Ok(h)
}
