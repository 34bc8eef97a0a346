//! Line-oriented text format:
//!
//! ```text
//! c optional comment
//! p ghom <n> <m>
//! e <u> <v>        (m lines, 1-based ids, `e u u` is a loop)
//! ```

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `p ghom <n> <m>`")]
    MalformedHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("edge line before header")]
    EdgeBeforeHeader,
    #[error("malformed edge line, expected `e <u> <v>`")]
    MalformedEdge,
    #[error("endpoint {0} out of range 1..={1}")]
    EndpointOutOfRange(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("more than the {0} edges announced in the header")]
    TooManyEdges(usize),
    #[error("header announced {expected} edges, found {found}")]
    TooFewEdges { expected: usize, found: usize },
    #[error("missing header")]
    MissingHeader,
    #[error("unrecognised line")]
    UnknownLine,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen_edges = 0usize;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        let mut tokens = line.split_ascii_whitespace();
        match tokens.next() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err(line_no, ParseErrorKind::DuplicateHeader));
                }
                let fields: Vec<&str> = tokens.collect();
                let parsed = match fields.as_slice() {
                    ["ghom", n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                    _ => None,
                };
                let (n, m) = parsed.ok_or_else(|| err(line_no, ParseErrorKind::MalformedHeader))?;
                graph = Some((Graph::new(n), m));
            }
            Some("e") => {
                let (g, m) = graph
                    .as_mut()
                    .ok_or_else(|| err(line_no, ParseErrorKind::EdgeBeforeHeader))?;
                let fields: Vec<usize> = tokens
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| err(line_no, ParseErrorKind::MalformedEdge))?;
                let [u, v] = fields[..] else {
                    return Err(err(line_no, ParseErrorKind::MalformedEdge));
                };
                let n = g.n();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line_no, ParseErrorKind::EndpointOutOfRange(x, n)));
                    }
                }
                if seen_edges == *m {
                    return Err(err(line_no, ParseErrorKind::TooManyEdges(*m)));
                }
                if !g.add_edge(u - 1, v - 1) {
                    return Err(err(line_no, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
                }
                seen_edges += 1;
            }
            Some(_) => return Err(err(line_no, ParseErrorKind::UnknownLine)),
        }
    }
    let (g, m) = graph.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    if seen_edges != m {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::TooFewEdges { expected: m, found: seen_edges },
        ));
    }
    Ok(g)
}

/// Canonical form: header, then edges `u <= v` in lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p ghom {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
