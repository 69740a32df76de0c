//! Reading and writing digraphs, verdicts and oracle reports.
//!
//! Three instance formats are understood:
//!
//! * JSON: `{"n": 4, "arcs": [[0, 1], ...], "partite_sets": [[0, 2], ...]}`,
//!   the last field optional.
//! * Matrix text: one row of `0`/`1` per line. Blank lines and lines starting
//!   with `#` are skipped, whitespace inside a row is ignored.
//! * DOT: a `digraph` whose nodes are named `v<i>` or `<i>`. Top-level
//!   `cluster` subgraphs that cover every vertex are read as partite sets.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::matrix::BoolMatrix;
use crate::oracle::SequenceReport;
use crate::structure::PartiteStructure;
use crate::theory::Verdict;

/// A digraph with optionally declared partite sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub digraph: Digraph,
    pub partite: Option<PartiteStructure>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Matrix,
    Dot,
}

impl Format {
    /// Guesses the format from the first meaningful character.
    pub fn sniff(text: &str) -> Format {
        let first = text
            .lines()
            .map(str::trim_start)
            .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("//"));
        match first.and_then(|l| l.chars().next()) {
            Some('{') => Format::Json,
            Some('0') | Some('1') => Format::Matrix,
            _ => Format::Dot,
        }
    }
}

pub fn parse_instance(text: &str, format: Format) -> Result<Instance> {
    match format {
        Format::Json => parse_json(text),
        Format::Matrix => Ok(Instance {
            digraph: parse_matrix(text)?,
            partite: None,
        }),
        Format::Dot => parse_dot(text),
    }
}

// ---------------------------------------------------------------- JSON

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    n: usize,
    arcs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partite_sets: Option<Vec<Vec<usize>>>,
}

pub fn parse_json(text: &str) -> Result<Instance> {
    let raw: RawInstance =
        serde_json::from_str(text).map_err(|e| Error::parse_at(e.line(), e.column(), e.to_string()))?;
    let mut digraph = Digraph::new(raw.n);
    for (i, &(u, v)) in raw.arcs.iter().enumerate() {
        digraph
            .try_add_arc(u, v)
            .map_err(|e| Error::parse_in(format!("arcs[{i}]"), bare_message(e)))?;
    }
    let partite = raw
        .partite_sets
        .map(|lists| {
            PartiteStructure::from_lists(raw.n, &lists).map_err(|e| Error::parse_in("partite_sets", bare_message(e)))
        })
        .transpose()?;
    Ok(Instance { digraph, partite })
}

fn bare_message(e: Error) -> String {
    match e {
        Error::InvalidArgument(m) => m,
        other => other.to_string(),
    }
}

pub fn to_json(d: &Digraph, partite: Option<&PartiteStructure>) -> String {
    let raw = RawInstance {
        n: d.n(),
        arcs: d.arcs().collect(),
        partite_sets: partite.map(PartiteStructure::to_lists),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

fn matrix_rows(m: &BoolMatrix) -> Vec<String> {
    m.to_text().lines().map(str::to_owned).collect()
}

/// `kind`, `period`, `case`, `stabilization_bound` and one adjacency matrix
/// per residue of `m` modulo the period.
pub fn verdict_json(v: &Verdict) -> Value {
    let graphs: Vec<Value> = v
        .graphs
        .iter()
        .enumerate()
        .map(|(r, g)| json!({ "residue": r, "matrix": matrix_rows(g.adjacency()) }))
        .collect();
    json!({
        "kind": v.kind.to_string(),
        "period": v.period,
        "case": v.case.to_string(),
        "stabilization_bound": v.stabilization_bound,
        "graphs": graphs,
    })
}

/// `preperiod`, `period` and the graphs of one period starting at the
/// preperiod.
pub fn report_json(r: &SequenceReport) -> Value {
    let graphs: Vec<Value> = r
        .cycle_graphs
        .iter()
        .enumerate()
        .map(|(i, g)| json!({ "m": r.preperiod + i, "matrix": matrix_rows(g.adjacency()) }))
        .collect();
    json!({ "preperiod": r.preperiod, "period": r.period, "graphs": graphs })
}

// ---------------------------------------------------------------- matrix

pub fn parse_matrix(text: &str) -> Result<Digraph> {
    let mut rows: Vec<(usize, Vec<(usize, bool)>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '0' => row.push((c + 1, false)),
                '1' => row.push((c + 1, true)),
                ch if ch.is_whitespace() => {}
                ch => return Err(Error::parse_at(i + 1, c + 1, format!("unexpected character {ch:?}"))),
            }
        }
        rows.push((i + 1, row));
    }
    let n = rows.len();
    let mut d = Digraph::new(n);
    for (u, (line, row)) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::parse_at(*line, 1, format!("row has {} entries, expected {n}", row.len())));
        }
        for (v, &(col, bit)) in row.iter().enumerate() {
            if !bit {
                continue;
            }
            if u == v {
                return Err(Error::parse_at(*line, col, format!("self-loop at vertex {u}")));
            }
            d.add_arc(u, v);
        }
    }
    Ok(d)
}

pub fn to_matrix_text(d: &Digraph) -> String {
    d.adjacency().to_text()
}

// ---------------------------------------------------------------- DOT out

/// DOT for a digraph, partite sets drawn as clusters.
pub fn digraph_to_dot(d: &Digraph, partite: Option<&PartiteStructure>) -> String {
    let mut s = String::from("digraph D {\n");
    match partite {
        Some(ps) => {
            for (i, part) in ps.parts().iter().enumerate() {
                let _ = write!(s, "  subgraph cluster_V{} {{ label=\"V{}\";", i + 1, i + 1);
                for v in part {
                    let _ = write!(s, " v{v};");
                }
                s.push_str(" }\n");
            }
        }
        None => {
            for v in 0..d.n() {
                let _ = writeln!(s, "  v{v};");
            }
        }
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "  v{u} -> v{v};");
    }
    s.push_str("}\n");
    s
}

pub fn graph_to_dot(g: &UndirectedGraph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  v{v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  v{u} -- v{v};");
    }
    s.push_str("}\n");
    s
}

// ---------------------------------------------------------------- DOT in

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Id(String),
    Arrow,
    Dash,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Eq,
    Semi,
    Comma,
    Colon,
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let pos = Pos { line, col };
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col);
        } else if c == '#' && col == 1 || c == '/' && next == Some('/') {
            while i < chars.len() && chars[i] != '\n' {
                bump(&mut i, &mut line, &mut col);
            }
        } else if c == '/' && next == Some('*') {
            bump(&mut i, &mut line, &mut col);
            bump(&mut i, &mut line, &mut col);
            loop {
                if i >= chars.len() {
                    return Err(Error::parse_at(pos.line, pos.col, "unterminated comment"));
                }
                if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    bump(&mut i, &mut line, &mut col);
                    bump(&mut i, &mut line, &mut col);
                    break;
                }
                bump(&mut i, &mut line, &mut col);
            }
        } else if c == '"' {
            bump(&mut i, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(Error::parse_at(pos.line, pos.col, "unterminated string")),
                    Some('"') => break,
                    Some('\\') if chars.get(i + 1).is_some() => {
                        bump(&mut i, &mut line, &mut col);
                        s.push(chars[i]);
                    }
                    Some(&ch) => s.push(ch),
                }
                bump(&mut i, &mut line, &mut col);
            }
            bump(&mut i, &mut line, &mut col);
            out.push((Tok::Id(s), pos));
        } else if c == '-' && next == Some('>') {
            bump(&mut i, &mut line, &mut col);
            bump(&mut i, &mut line, &mut col);
            out.push((Tok::Arrow, pos));
        } else if c == '-' && next == Some('-') {
            bump(&mut i, &mut line, &mut col);
            bump(&mut i, &mut line, &mut col);
            out.push((Tok::Dash, pos));
        } else if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                s.push(chars[i]);
                bump(&mut i, &mut line, &mut col);
            }
            if s.is_empty() {
                return Err(Error::parse_at(pos.line, pos.col, format!("unexpected character {c:?}")));
            }
            out.push((Tok::Id(s), pos));
        } else {
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '=' => Tok::Eq,
                ';' => Tok::Semi,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                _ => return Err(Error::parse_at(pos.line, pos.col, format!("unexpected character {c:?}"))),
            };
            bump(&mut i, &mut line, &mut col);
            out.push((tok, pos));
        }
    }
    Ok(out)
}

struct DotParser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
    arcs: Vec<(usize, usize, Pos)>,
    nodes: Vec<usize>,
    clusters: Vec<Vec<usize>>,
}

impl DotParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let p = self.pos();
        Error::parse_at(p.line, p.col, msg)
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {want:?}")))
        }
    }

    fn id(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Id(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => Err(self.err("expected an identifier")),
        }
    }

    fn keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Tok::Id(s)) if s.eq_ignore_ascii_case(word))
    }

    fn vertex(&mut self) -> Result<usize> {
        let pos = self.pos();
        let name = self.id()?;
        let digits = name.strip_prefix('v').unwrap_or(&name);
        let v = digits
            .parse::<usize>()
            .map_err(|_| Error::parse_at(pos.line, pos.col, format!("node name {name:?} is not v<index> or <index>")))?;
        if self.peek() == Some(&Tok::Colon) {
            return Err(self.err("ports are not supported"));
        }
        self.nodes.push(v);
        Ok(v)
    }

    fn attr_lists(&mut self) -> Result<()> {
        while self.peek() == Some(&Tok::LBracket) {
            self.at += 1;
            while self.peek() != Some(&Tok::RBracket) {
                self.id()?;
                self.expect(Tok::Eq)?;
                self.id()?;
                if matches!(self.peek(), Some(Tok::Semi) | Some(Tok::Comma)) {
                    self.at += 1;
                }
            }
            self.at += 1;
        }
        Ok(())
    }

    fn graph(&mut self) -> Result<()> {
        if self.keyword("strict") {
            self.at += 1;
        }
        if self.keyword("graph") {
            return Err(self.err("expected a digraph, found an undirected graph"));
        }
        if !self.keyword("digraph") {
            return Err(self.err("expected `digraph`"));
        }
        self.at += 1;
        if matches!(self.peek(), Some(Tok::Id(_))) {
            self.at += 1;
        }
        self.expect(Tok::LBrace)?;
        self.stmts(true)?;
        if self.at < self.toks.len() {
            return Err(self.err("trailing input after graph"));
        }
        Ok(())
    }

    /// Statements up to and including the closing brace.
    fn stmts(&mut self, top: bool) -> Result<()> {
        loop {
            match self.peek() {
                None => return Err(self.err("missing `}`")),
                Some(Tok::RBrace) => {
                    self.at += 1;
                    return Ok(());
                }
                Some(Tok::Semi) | Some(Tok::Comma) => self.at += 1,
                _ => self.stmt(top)?,
            }
        }
    }

    fn stmt(&mut self, top: bool) -> Result<()> {
        if self.keyword("graph") || self.keyword("node") || self.keyword("edge") {
            self.at += 1;
            return self.attr_lists();
        }
        if self.keyword("subgraph") || self.peek() == Some(&Tok::LBrace) {
            let mut name = String::new();
            if self.keyword("subgraph") {
                self.at += 1;
                if matches!(self.peek(), Some(Tok::Id(_))) {
                    name = self.id()?;
                }
            }
            self.expect(Tok::LBrace)?;
            let before = self.nodes.len();
            self.stmts(false)?;
            if top && name.starts_with("cluster") {
                let mut members = self.nodes[before..].to_vec();
                members.sort_unstable();
                members.dedup();
                self.clusters.push(members);
            }
            if self.peek() == Some(&Tok::Arrow) {
                return Err(self.err("subgraphs as arc endpoints are not supported"));
            }
            return Ok(());
        }
        // `id = id` graph attribute
        if matches!(self.toks.get(self.at + 1), Some((Tok::Eq, _))) {
            self.id()?;
            self.at += 1;
            self.id()?;
            return Ok(());
        }
        let mut prev = self.vertex()?;
        loop {
            match self.peek() {
                Some(Tok::Arrow) => {
                    let pos = self.pos();
                    self.at += 1;
                    let v = self.vertex()?;
                    self.arcs.push((prev, v, pos));
                    prev = v;
                }
                Some(Tok::Dash) => return Err(self.err("undirected edge in a digraph")),
                _ => break,
            }
        }
        self.attr_lists()
    }
}

pub fn parse_dot(text: &str) -> Result<Instance> {
    let toks = tokenize(text)?;
    let lines = text.lines().count().max(1);
    let end = Pos {
        line: lines,
        col: text.lines().last().map_or(1, |l| l.chars().count() + 1),
    };
    let mut p = DotParser {
        toks,
        at: 0,
        end,
        arcs: Vec::new(),
        nodes: Vec::new(),
        clusters: Vec::new(),
    };
    p.graph()?;
    let n = p.nodes.iter().max().map_or(0, |&m| m + 1);
    let mut digraph = Digraph::new(n);
    for &(u, v, pos) in &p.arcs {
        digraph
            .try_add_arc(u, v)
            .map_err(|e| Error::parse_at(pos.line, pos.col, bare_message(e)))?;
    }
    let covered: usize = p.clusters.iter().map(Vec::len).sum();
    let partite = if p.clusters.len() >= 2 && covered == n {
        PartiteStructure::from_lists(n, &p.clusters).ok()
    } else {
        None
    };
    Ok(Instance { digraph, partite })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_with_parts() {
        let d = Digraph::from_arcs(3, [(0, 1), (2, 1)]).unwrap();
        let ps = PartiteStructure::from_lists(3, &[vec![0, 2], vec![1]]).unwrap();
        let text = to_json(&d, Some(&ps));
        let back = parse_json(&text).unwrap();
        assert_eq!(back.digraph, d);
        assert_eq!(back.partite, Some(ps));
    }

    #[test]
    fn json_errors_carry_location() {
        let e = parse_json("{\"n\": 2, \"arcs\": [[0, 1], [1, 1]]}").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                location: "arcs[1]".into(),
                message: "self-loop at vertex 1".into()
            }
        );
        let e = parse_json("{\"n\": 2,\n \"arcs\": [[0, 1]").unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location.starts_with("line 2")), "{e}");
        assert!(parse_json("{\"n\": 2, \"arcs\": [], \"extra\": 1}").is_err());
        assert!(parse_json("{\"n\": 2, \"arcs\": [[0, 2]]}").is_err());
    }

    #[test]
    fn matrix_parsing() {
        let d = parse_matrix("# D\n011\n0 0 1\n\n000\n").unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(to_matrix_text(&d), "011\n001\n000\n");
    }

    #[test]
    fn matrix_errors() {
        let e = parse_matrix("01\n11\n").unwrap_err();
        assert_eq!(e.to_string(), "parse error at line 2, column 2: self-loop at vertex 1");
        assert!(parse_matrix("01\n0\n").is_err());
        assert!(parse_matrix("0x\n00\n").is_err());
    }

    #[test]
    fn dot_roundtrip_with_clusters() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let ps = PartiteStructure::from_lists(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let back = parse_dot(&digraph_to_dot(&d, Some(&ps))).unwrap();
        assert_eq!(back.digraph, d);
        assert_eq!(back.partite, Some(ps));
        let plain = parse_dot(&digraph_to_dot(&d, None)).unwrap();
        assert_eq!(plain.digraph, d);
        assert_eq!(plain.partite, None);
    }

    #[test]
    fn dot_accepts_common_syntax() {
        let text = r#"
            // comment
            strict digraph "g" {
              rankdir = LR; node [shape=circle, color="red"];
              0 -> 1 -> 2 [label="x"]
              /* block */ v3; 2 -> v3
            }"#;
        let inst = parse_dot(text).unwrap();
        assert_eq!(inst.digraph.n(), 4);
        assert_eq!(inst.digraph.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn dot_errors() {
        let e = parse_dot("digraph {\n  a -> 1\n}").unwrap_err();
        assert!(e.to_string().contains("line 2, column 3"), "{e}");
        assert!(parse_dot("graph { 0 -- 1 }").is_err());
        assert!(parse_dot("digraph { 0 -> 1").is_err());
        let e = parse_dot("digraph {\n 1 -> 1 }").unwrap_err();
        assert!(e.to_string().contains("self-loop"), "{e}");
    }

    #[test]
    fn sniffing() {
        assert_eq!(Format::sniff("  {\"n\": 1}"), Format::Json);
        assert_eq!(Format::sniff("# m\n010\n"), Format::Matrix);
        assert_eq!(Format::sniff("digraph {}"), Format::Dot);
    }
}
