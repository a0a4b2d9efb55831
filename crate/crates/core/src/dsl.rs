//! Line-oriented text format for incidence quotients.
//!
//! ```text
//! algebra square-with-zeros
//! vertices 1 2 3 4 5 6
//! arrows 1->2 2->3 2->4 3->5 4->5 5->6
//! zero 1 ~> 4
//! zero 3 ~> 6
//! ```
//!
//! The first line names the algebra. Later lines declare vertices, arrows and
//! zero pairs in any order; blank lines and lines starting with `#` are ignored.

use crate::combinatorics::Quiver;
use crate::error::Error;
use crate::presentation::IncidenceQuotient;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error as ThisError;

/// One-based line and column of a token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// A token together with where it was read.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    pub at: Location,
}

#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
pub enum DiagnosticKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("vertex {0} is declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("arrow {0} -> {0} is a loop")]
    SelfArrow(String),
    #[error("arrow {0} -> {1} is listed twice")]
    DuplicateArrow(String, String),
    #[error("{0}")]
    Invalid(Error),
}

impl DiagnosticKind {
    /// Stable error code.
    pub fn code(&self) -> &'static str {
        match self {
            DiagnosticKind::Syntax(_) => "E001",
            DiagnosticKind::DuplicateVertex(_) => "E002",
            DiagnosticKind::UnknownVertex(_) => "E003",
            DiagnosticKind::SelfArrow(_) => "E004",
            DiagnosticKind::DuplicateArrow(..) => "E005",
            DiagnosticKind::Invalid(_) => "E006",
        }
    }
}

/// A located parse or validation error.
#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
#[error("{at}: error[{}]: {kind}", kind.code())]
pub struct Diagnostic {
    pub at: Location,
    pub kind: DiagnosticKind,
}

impl Diagnostic {
    fn new(line: usize, column: usize, kind: DiagnosticKind) -> Self {
        Diagnostic {
            at: Location { line, column },
            kind,
        }
    }

    fn syntax(at: Location, msg: impl Into<String>) -> Self {
        Diagnostic {
            at,
            kind: DiagnosticKind::Syntax(msg.into()),
        }
    }
}

/// Parsed document, before any algebraic validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpecDocument {
    pub name: Token,
    pub vertices: Vec<Token>,
    pub arrows: Vec<(Token, Token)>,
    pub zeros: Vec<(Token, Token)>,
}

/// Splits a line into whitespace-separated words with their columns.
fn words(line: &str, line_no: usize) -> Vec<Token> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    for (col, ch) in line.chars().enumerate() {
        if ch == ' ' || ch == '\t' {
            if !current.is_empty() {
                out.push(Token {
                    text: std::mem::take(&mut current),
                    at: Location {
                        line: line_no,
                        column: start + 1,
                    },
                });
            }
        } else {
            if current.is_empty() {
                start = col;
            }
            current.push(ch);
        }
    }
    if !current.is_empty() {
        out.push(Token {
            text: current,
            at: Location {
                line: line_no,
                column: start + 1,
            },
        });
    }
    out
}

fn check_name(tok: &Token) -> Result<(), Diagnostic> {
    let bad = tok.text.contains("->")
        || tok.text.contains("~>")
        || tok.text.contains('#')
        || tok.text.chars().any(char::is_control);
    if bad {
        Err(Diagnostic::syntax(
            tok.at,
            format!("invalid name `{}`", tok.text),
        ))
    } else {
        Ok(())
    }
}

fn shifted(at: Location, by: usize) -> Location {
    Location {
        line: at.line,
        column: at.column + by,
    }
}

/// Parses the text format. Every failure carries a line and column.
pub fn parse_spec(text: &str) -> Result<AlgebraSpecDocument, Diagnostic> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(k, l)| (k + 1, l.strip_suffix('\r').unwrap_or(l)));
    let (_, first) = lines.next().unwrap_or((1, ""));
    let head = words(first, 1);
    if head.first().map(|t| t.text.as_str()) != Some("algebra") {
        let at = head
            .first()
            .map_or(Location { line: 1, column: 1 }, |t| t.at);
        return Err(Diagnostic::syntax(
            at,
            "expected `algebra <name>` on the first line",
        ));
    }
    if head.len() != 2 {
        let at = head.get(2).map_or(shifted(head[0].at, 7), |t| t.at);
        return Err(Diagnostic::syntax(
            at,
            "expected exactly one name after `algebra`",
        ));
    }
    check_name(&head[1])?;
    let mut doc = AlgebraSpecDocument {
        name: head[1].clone(),
        vertices: Vec::new(),
        arrows: Vec::new(),
        zeros: Vec::new(),
    };
    for (line_no, line) in lines {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let ws = words(line, line_no);
        let Some(keyword) = ws.first() else { continue };
        match keyword.text.as_str() {
            "vertices" => {
                if ws.len() < 2 {
                    return Err(Diagnostic::syntax(
                        shifted(keyword.at, 8),
                        "expected at least one vertex",
                    ));
                }
                for tok in &ws[1..] {
                    check_name(tok)?;
                    doc.vertices.push(tok.clone());
                }
            }
            "arrows" => {
                if ws.len() < 2 {
                    return Err(Diagnostic::syntax(
                        shifted(keyword.at, 6),
                        "expected at least one arrow",
                    ));
                }
                for tok in &ws[1..] {
                    let Some(pos) = tok.text.find("->") else {
                        return Err(Diagnostic::syntax(
                            tok.at,
                            format!("expected `a->b`, found `{}`", tok.text),
                        ));
                    };
                    let (s, t) = (&tok.text[..pos], &tok.text[pos + 2..]);
                    let t_col = s.chars().count() + 2;
                    let source = Token {
                        text: s.to_string(),
                        at: tok.at,
                    };
                    let target = Token {
                        text: t.to_string(),
                        at: shifted(tok.at, t_col),
                    };
                    if s.is_empty() || t.is_empty() {
                        return Err(Diagnostic::syntax(
                            tok.at,
                            format!("expected `a->b`, found `{}`", tok.text),
                        ));
                    }
                    check_name(&source)?;
                    check_name(&target)?;
                    doc.arrows.push((source, target));
                }
            }
            "zero" => {
                if ws.len() != 4 || ws[2].text != "~>" {
                    let at = ws.get(2).filter(|t| t.text != "~>").or(ws.get(4)).map_or(
                        ws.last()
                            .map_or(keyword.at, |t| shifted(t.at, t.text.chars().count())),
                        |t| t.at,
                    );
                    return Err(Diagnostic::syntax(
                        at,
                        "expected `zero <vertex> ~> <vertex>`",
                    ));
                }
                check_name(&ws[1])?;
                check_name(&ws[3])?;
                doc.zeros.push((ws[1].clone(), ws[3].clone()));
            }
            other => {
                return Err(Diagnostic::syntax(
                    keyword.at,
                    format!("unknown keyword `{other}`; expected vertices, arrows or zero"),
                ));
            }
        }
    }
    Ok(doc)
}

impl AlgebraSpecDocument {
    /// Resolves names and builds the algebra, locating any failure.
    pub fn build(&self) -> Result<IncidenceQuotient, Diagnostic> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for tok in &self.vertices {
            if index.insert(tok.text.as_str(), index.len()).is_some() {
                return Err(located(
                    tok.at,
                    DiagnosticKind::DuplicateVertex(tok.text.clone()),
                ));
            }
        }
        let lookup = |tok: &Token| {
            index
                .get(tok.text.as_str())
                .copied()
                .ok_or_else(|| located(tok.at, DiagnosticKind::UnknownVertex(tok.text.clone())))
        };
        let mut arrows = Vec::with_capacity(self.arrows.len());
        let mut arrow_at: HashMap<(usize, usize), Location> = HashMap::new();
        for (s, t) in &self.arrows {
            let pair = (lookup(s)?, lookup(t)?);
            if pair.0 == pair.1 {
                return Err(located(s.at, DiagnosticKind::SelfArrow(s.text.clone())));
            }
            if arrow_at.insert(pair, s.at).is_some() {
                return Err(located(
                    s.at,
                    DiagnosticKind::DuplicateArrow(s.text.clone(), t.text.clone()),
                ));
            }
            arrows.push(pair);
        }
        let mut zeros = Vec::with_capacity(self.zeros.len());
        let mut zero_at: HashMap<(usize, usize), Location> = HashMap::new();
        for (s, t) in &self.zeros {
            let pair = (lookup(s)?, lookup(t)?);
            zero_at.entry(pair).or_insert(s.at);
            zeros.push(pair);
        }
        let labels: Vec<String> = self.vertices.iter().map(|t| t.text.clone()).collect();
        let by_label = |l: &str| index.get(l).copied();
        let locate = |err: Error| -> Diagnostic {
            let at = match &err {
                Error::NotAHasseDiagram(s, t) | Error::DuplicateArrow(s, t) => by_label(s)
                    .zip(by_label(t))
                    .and_then(|p| arrow_at.get(&p).copied()),
                Error::MalformedRelation(s, t) => by_label(s)
                    .zip(by_label(t))
                    .and_then(|p| zero_at.get(&p).copied()),
                Error::TriangularityViolation(v) | Error::LoopArrow(v) => {
                    by_label(v).and_then(|x| {
                        self.arrows
                            .iter()
                            .find(|(s, _)| s.text == self.vertices[x].text)
                            .map(|(s, _)| s.at)
                    })
                }
                _ => None,
            };
            located(at.unwrap_or(self.name.at), DiagnosticKind::Invalid(err))
        };
        let hasse = Quiver::new(labels, &arrows).map_err(locate)?;
        IncidenceQuotient::from_poset(self.name.text.clone(), hasse, &zeros).map_err(locate)
    }
}

fn located(at: Location, kind: DiagnosticKind) -> Diagnostic {
    Diagnostic::new(at.line, at.column, kind)
}

/// Parses and builds in one step.
pub fn parse_algebra(text: &str) -> Result<IncidenceQuotient, Diagnostic> {
    parse_spec(text)?.build()
}

/// Writes an incidence quotient in the text format.
pub fn to_spec_text(q: &IncidenceQuotient) -> String {
    let h = q.hasse();
    let mut out = format!("algebra {}\n", sanitize(q.name()));
    if h.vertex_count() > 0 {
        out.push_str("vertices");
        for l in h.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    if !h.arrows().is_empty() {
        out.push_str("arrows");
        for &(s, t) in h.arrows() {
            out.push_str(&format!(" {}->{}", h.label(s), h.label(t)));
        }
        out.push('\n');
    }
    for &(s, t) in q.zeros() {
        out.push_str(&format!("zero {} ~> {}\n", h.label(s), h.label(t)));
    }
    out
}

fn sanitize(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| {
            if c.is_whitespace() || c == '#' || c.is_control() {
                '_'
            } else {
                c
            }
        })
        .collect::<String>()
        .replace("->", "_")
        .replace("~>", "_");
    if cleaned.is_empty() {
        "unnamed".to_string()
    } else {
        cleaned
    }
}
