//! The line-oriented graph file format.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! domain gaussian
//! antiinvolution conjugate
//! vertices 3
//! edge 0 1 i
//! edge 1 2 1
//! edge 2 0 1
//! ```
//!
//! Each `edge u v gain` record gives the gain of the oriented edge `u -> v`.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::SkewGainGraph;
use crate::scalar::{AntiInvolution, Complex64, Domain, Field, GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl ParseError {
    fn new(line: usize, reason: impl Into<String>) -> Self {
        Self {
            line,
            reason: reason.into(),
        }
    }
}

/// A graph over whichever domain its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyGraph {
    Rational(SkewGainGraph<Rational>),
    Gaussian(SkewGainGraph<GaussianRational>),
    Complex(SkewGainGraph<Complex64>),
}

/// Runs `$body` with `$g` bound to the typed graph inside an [`AnyGraph`].
macro_rules! with_graph {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::io::AnyGraph::Rational($g) => $body,
            $crate::io::AnyGraph::Gaussian($g) => $body,
            $crate::io::AnyGraph::Complex($g) => $body,
        }
    };
}
pub(crate) use with_graph;

impl AnyGraph {
    pub fn domain(&self) -> Domain {
        with_graph!(self, g => g.domain())
    }

    pub fn order(&self) -> usize {
        with_graph!(self, g => g.order())
    }

    pub fn to_file(&self) -> String {
        with_graph!(self, g => write_graph_file(g, &[]))
    }
}

impl From<SkewGainGraph<Rational>> for AnyGraph {
    fn from(g: SkewGainGraph<Rational>) -> Self {
        AnyGraph::Rational(g)
    }
}

impl From<SkewGainGraph<GaussianRational>> for AnyGraph {
    fn from(g: SkewGainGraph<GaussianRational>) -> Self {
        AnyGraph::Gaussian(g)
    }
}

impl From<SkewGainGraph<Complex64>> for AnyGraph {
    fn from(g: SkewGainGraph<Complex64>) -> Self {
        AnyGraph::Complex(g)
    }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        (!words.is_empty()).then_some((k + 1, words))
    })
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
    last_line: usize,
) -> Result<(usize, &'a str), ParseError> {
    match lines.next() {
        Some((line, words)) if words[0] == keyword && words.len() == 2 => Ok((line, words[1])),
        Some((line, _)) => Err(ParseError::new(
            line,
            format!("expected `{keyword} <value>`"),
        )),
        None => Err(ParseError::new(
            last_line,
            format!("missing `{keyword}` header"),
        )),
    }
}

pub fn parse_graph_file(text: &str) -> Result<AnyGraph, ParseError> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text);

    let (line, name) = header(&mut lines, "domain", last_line)?;
    let domain: Domain = name
        .parse()
        .map_err(|e: crate::Error| ParseError::new(line, e.to_string()))?;

    let (line, name) = header(&mut lines, "antiinvolution", last_line)?;
    let involution: AntiInvolution = name
        .parse()
        .map_err(|e: crate::Error| ParseError::new(line, e.to_string()))?;
    involution
        .check_domain(domain)
        .map_err(|e| ParseError::new(line, e.to_string()))?;

    let (line, count) = header(&mut lines, "vertices", last_line)?;
    let order: usize = count
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid vertex count `{count}`")))?;

    let records: Vec<_> = lines.collect();
    Ok(match domain {
        Domain::Rational => AnyGraph::Rational(parse_edges(order, involution, &records)?),
        Domain::GaussianRational => AnyGraph::Gaussian(parse_edges(order, involution, &records)?),
        Domain::ComplexFloat => AnyGraph::Complex(parse_edges(order, involution, &records)?),
    })
}

/// Parses a file that must declare the domain of `F`.
pub fn parse_graph_file_as<F: Field>(text: &str) -> Result<SkewGainGraph<F>, ParseError>
where
    AnyGraph: TryInto<SkewGainGraph<F>, Error = AnyGraph>,
{
    parse_graph_file(text)?
        .try_into()
        .map_err(|other: AnyGraph| {
            ParseError::new(
                1,
                format!("expected domain {}, found {}", F::DOMAIN, other.domain()),
            )
        })
}

macro_rules! try_from_any {
    ($variant:ident, $field:ty) => {
        impl TryFrom<AnyGraph> for SkewGainGraph<$field> {
            type Error = AnyGraph;

            fn try_from(any: AnyGraph) -> Result<Self, AnyGraph> {
                match any {
                    AnyGraph::$variant(g) => Ok(g),
                    other => Err(other),
                }
            }
        }
    };
}

try_from_any!(Rational, Rational);
try_from_any!(Gaussian, GaussianRational);
try_from_any!(Complex, Complex64);

fn parse_edges<F: Field>(
    order: usize,
    involution: AntiInvolution,
    records: &[(usize, Vec<&str>)],
) -> Result<SkewGainGraph<F>, ParseError> {
    let mut edges = Vec::with_capacity(records.len());
    let mut seen = HashSet::new();
    for (line, words) in records {
        let line = *line;
        let [keyword, u, v, gain] = words[..] else {
            return Err(ParseError::new(line, "expected `edge <u> <v> <gain>`"));
        };
        if keyword != "edge" {
            return Err(ParseError::new(line, format!("unexpected `{keyword}`")));
        }
        let vertex = |text: &str| -> Result<usize, ParseError> {
            let v: usize = text
                .parse()
                .map_err(|_| ParseError::new(line, format!("invalid vertex `{text}`")))?;
            if v >= order {
                return Err(ParseError::new(
                    line,
                    format!("vertex {v} out of range for a graph of order {order}"),
                ));
            }
            Ok(v)
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        if u == v {
            return Err(ParseError::new(line, format!("loop edge at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(line, format!("duplicate edge {u}-{v}")));
        }
        let gain = F::parse_literal(gain).map_err(|e| ParseError::new(line, e.to_string()))?;
        if gain.is_zero() {
            return Err(ParseError::new(line, "gain must be nonzero"));
        }
        edges.push((u, v, gain));
    }
    SkewGainGraph::new(order, edges, involution)
        .map_err(|e| ParseError::new(records.last().map_or(1, |r| r.0), e.to_string()))
}

/// Serialises a graph with its edges in stored (canonical) orientation.
/// `comments` become leading `#` lines.
pub fn write_graph_file<F: Field>(graph: &SkewGainGraph<F>, comments: &[String]) -> String {
    let mut out = String::new();
    for comment in comments {
        let _ = writeln!(out, "# {comment}");
    }
    let _ = writeln!(out, "domain {}", graph.domain());
    let _ = writeln!(out, "antiinvolution {}", graph.involution());
    let _ = writeln!(out, "vertices {}", graph.order());
    for edge in graph.edges() {
        let _ = writeln!(out, "edge {} {} {}", edge.u, edge.v, edge.gain.to_literal());
    }
    out
}
