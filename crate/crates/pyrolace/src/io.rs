//! Text formats for graphs and hypergraphs.
//!
//! Graph files:
//!
//! ```text
//! # optional comments
//! graph 8
//! e v1 v2
//! e v2 v3
//! ```
//!
//! Hypergraph files declare vertices before use:
//!
//! ```text
//! hypergraph 4
//! v v1
//! v v2
//! h v1 v2
//! ```
//!
//! Labels are arbitrary non-whitespace tokens. Parsing is strict: unknown
//! directives are errors. Graph labels receive indices in natural order
//! (digit runs compare numerically, so `v2 < v10`), which makes the parse
//! independent of line order and the serialize→parse round trip exact for
//! every fixture; hypergraph vertices are indexed in declaration order.
//! Vertices never named in a file get the smallest unused `v<k>` labels.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexLabeling};
use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `{expected} <n>` header")]
    MissingHeader { expected: &'static str },
    #[error("line {line}: malformed header, expected `{expected} <n>`")]
    BadHeader { line: usize, expected: &'static str },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: unknown directive `{directive}`")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: `{directive}` takes {expected} argument(s)")]
    WrongArity {
        line: usize,
        directive: &'static str,
        expected: &'static str,
    },
    #[error("line {line}: self-loop at `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge `{a} {b}`")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: vertex `{label}` declared twice")]
    DuplicateVertex { line: usize, label: String },
    #[error("line {line}: label `{label}` repeats within one hyperedge")]
    RepeatedInHyperedge { line: usize, label: String },
    #[error("line {line}: unknown label `{label}` (declare it with a `v` line)")]
    UnknownLabel { line: usize, label: String },
    #[error("{declared} labels declared but the header allows only {order}")]
    TooManyLabels { declared: usize, order: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A graph together with its external labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: VertexLabeling,
}

/// A hypergraph together with its external labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledHypergraph {
    pub hypergraph: Hypergraph,
    pub labeling: VertexLabeling,
}

/// Natural string order: runs of digits compare as integers, everything else
/// bytewise, with a full-string tiebreak for things like leading zeros.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let mut x = a.as_bytes();
    let mut y = b.as_bytes();
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(&cx), Some(&cy)) => {
                if cx.is_ascii_digit() && cy.is_ascii_digit() {
                    let dx = x.iter().take_while(|c| c.is_ascii_digit()).count();
                    let dy = y.iter().take_while(|c| c.is_ascii_digit()).count();
                    let (nx, ny) = (&x[..dx], &y[..dy]);
                    let (tx, ty) = (trim_zeros(nx), trim_zeros(ny));
                    let ord = tx.len().cmp(&ty.len()).then_with(|| tx.cmp(ty));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    x = &x[dx..];
                    y = &y[dy..];
                } else {
                    if cx != cy {
                        return cx.cmp(&cy);
                    }
                    x = &x[1..];
                    y = &y[1..];
                }
            }
        }
    }
}

fn trim_zeros(digits: &[u8]) -> &[u8] {
    let start = digits.iter().take_while(|&&c| c == b'0').count();
    if start == digits.len() {
        &digits[digits.len() - 1..]
    } else {
        &digits[start..]
    }
}

/// Lines with content: (1-based line number, whitespace-split tokens).
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed.split_whitespace().collect()))
        }
    })
}

fn parse_header(
    tokens: &[&str],
    line: usize,
    expected: &'static str,
) -> Result<usize, ParseError> {
    if tokens[0] != expected {
        return Err(ParseError::MissingHeader { expected });
    }
    if tokens.len() != 2 {
        return Err(ParseError::BadHeader { line, expected });
    }
    tokens[1]
        .parse::<usize>()
        .map_err(|_| ParseError::BadHeader { line, expected })
}

/// Pads the declared labels with the smallest unused `v<k>` names up to
/// `order`. The caller re-sorts the result, so a default-labeled graph with
/// unmentioned (isolated) vertices reparses to exactly the same indices.
fn fill_default_labels(mut labels: Vec<String>, order: usize) -> Vec<String> {
    let mut taken: BTreeSet<String> = labels.iter().cloned().collect();
    let mut next = 1usize;
    while labels.len() < order {
        let candidate = format!("v{next}");
        next += 1;
        if taken.insert(candidate.clone()) {
            labels.push(candidate);
        }
    }
    labels
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or(ParseError::MissingHeader { expected: "graph" })?;
    let order = parse_header(&header, header_line, "graph")?;

    let mut declared: Vec<String> = Vec::new();
    let mut edge_labels: Vec<(String, String)> = Vec::new();
    let mut seen_pairs: BTreeSet<(String, String)> = BTreeSet::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "graph" => return Err(ParseError::DuplicateHeader { line }),
            "e" => {
                if tokens.len() != 3 {
                    return Err(ParseError::WrongArity {
                        line,
                        directive: "e",
                        expected: "two labels",
                    });
                }
                let (a, b) = (tokens[1].to_string(), tokens[2].to_string());
                if a == b {
                    return Err(ParseError::SelfLoop { line, label: a });
                }
                let key = (a.clone().min(b.clone()), a.clone().max(b.clone()));
                if !seen_pairs.insert(key.clone()) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        a: key.0,
                        b: key.1,
                    });
                }
                for label in [&a, &b] {
                    if !declared.contains(label) {
                        declared.push(label.clone());
                    }
                }
                edge_labels.push((a, b));
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                })
            }
        }
    }
    if declared.len() > order {
        return Err(ParseError::TooManyLabels {
            declared: declared.len(),
            order,
        });
    }
    let mut labels = fill_default_labels(declared, order);
    labels.sort_by(|a, b| natural_cmp(a, b));
    let labeling = VertexLabeling::new(labels)?;
    let edges = edge_labels.into_iter().map(|(a, b)| {
        let u = labeling.index_of(&a).expect("label registered");
        let v = labeling.index_of(&b).expect("label registered");
        (u, v)
    });
    let graph = Graph::new(order, edges.collect::<Vec<_>>())?;
    Ok(LabeledGraph { graph, labeling })
}

pub fn serialize_graph(g: &Graph, labeling: &VertexLabeling) -> String {
    let mut out = format!("graph {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", labeling.label(u), labeling.label(v)));
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<LabeledHypergraph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader {
        expected: "hypergraph",
    })?;
    let order = parse_header(&header, header_line, "hypergraph")?;

    let mut declared: Vec<String> = Vec::new();
    let mut hyperedges: Vec<Vec<String>> = Vec::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "hypergraph" => return Err(ParseError::DuplicateHeader { line }),
            "v" => {
                if tokens.len() != 2 {
                    return Err(ParseError::WrongArity {
                        line,
                        directive: "v",
                        expected: "one label",
                    });
                }
                let label = tokens[1].to_string();
                if declared.contains(&label) {
                    return Err(ParseError::DuplicateVertex { line, label });
                }
                declared.push(label);
            }
            "h" => {
                if tokens.len() < 2 {
                    return Err(ParseError::WrongArity {
                        line,
                        directive: "h",
                        expected: "at least one label",
                    });
                }
                let mut members = Vec::new();
                for token in &tokens[1..] {
                    let label = token.to_string();
                    if !declared.contains(&label) {
                        return Err(ParseError::UnknownLabel { line, label });
                    }
                    if members.contains(&label) {
                        return Err(ParseError::RepeatedInHyperedge { line, label });
                    }
                    members.push(label);
                }
                hyperedges.push(members);
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                })
            }
        }
    }
    if declared.len() > order {
        return Err(ParseError::TooManyLabels {
            declared: declared.len(),
            order,
        });
    }
    let labels = fill_default_labels(declared, order);
    let labeling = VertexLabeling::new(labels)?;
    let edges: Vec<Vec<usize>> = hyperedges
        .into_iter()
        .map(|members| {
            members
                .into_iter()
                .map(|label| labeling.index_of(&label).expect("label declared"))
                .collect()
        })
        .collect();
    let hypergraph = Hypergraph::new(order, edges)?;
    Ok(LabeledHypergraph {
        hypergraph,
        labeling,
    })
}

pub fn serialize_hypergraph(h: &Hypergraph, labeling: &VertexLabeling) -> String {
    let mut out = format!("hypergraph {}\n", h.order());
    for i in 0..h.order() {
        out.push_str(&format!("v {}\n", labeling.label(i)));
    }
    for e in h.hyperedges() {
        out.push_str("h");
        for v in e.iter() {
            out.push(' ');
            out.push_str(labeling.label(v));
        }
        out.push('\n');
    }
    out
}
