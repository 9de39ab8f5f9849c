//! Text format and path shorthand.
//!
//! A graph file holds one edge per line, `u v label`, with whitespace
//! separation; vertex names are arbitrary identifiers and labels are
//! non-negative integers.  `V name` declares an isolated vertex.  A bigraph
//! file additionally declares a side for every vertex with `L name` / `R name`
//! lines before the edges.  `#` starts a comment.
//!
//! The shorthand `P:3142` denotes the path whose i-th edge along the path
//! carries label given by the i-th digit; the digits must form a permutation
//! of `1..=k`.  A sign turns it into a bigraph: `P:+3142` starts at a Right
//! vertex, `P:-3142` at a Left one, and sides alternate along the path.
//! The shorthand is accepted anywhere a graph file is.

use crate::graph::{EdgeOrderedBigraph, EdgeOrderedGraph, Side};
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub enum Parsed {
    Graph(EdgeOrderedGraph),
    Bigraph(EdgeOrderedBigraph),
}

pub fn parse(text: &str) -> Result<Parsed> {
    let trimmed = text.trim();
    if trimmed.starts_with("P:") {
        return if trimmed[2..].starts_with(['+', '-']) {
            Ok(Parsed::Bigraph(parse_signed_path(trimmed)?))
        } else {
            Ok(Parsed::Graph(parse_path(trimmed)?))
        };
    }

    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut sides: HashMap<usize, Side> = HashMap::new();
    let mut declared_sideless: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();

    let intern = |names: &mut Vec<String>, index: &mut HashMap<String, usize>, t: &str| {
        *index.entry(t.to_string()).or_insert_with(|| {
            names.push(t.to_string());
            names.len() - 1
        })
    };

    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: &str| Error::Parse {
            line: lineno + 1,
            msg: msg.to_string(),
        };
        match toks.as_slice() {
            [] => {}
            [kind @ ("L" | "R" | "V"), name] => {
                let v = intern(&mut names, &mut index, name);
                match *kind {
                    "V" => declared_sideless.push(v),
                    k => {
                        let s = if k == "L" { Side::Left } else { Side::Right };
                        if sides.insert(v, s).is_some_and(|old| old != s) {
                            return Err(err(&format!("conflicting sides for {name}")));
                        }
                    }
                }
            }
            [u, v, label] => {
                let label: u64 = label
                    .parse()
                    .map_err(|_| err(&format!("bad label {label}")))?;
                let ui = intern(&mut names, &mut index, u);
                let vi = intern(&mut names, &mut index, v);
                edges.push((ui, vi, label));
            }
            _ => return Err(err("expected `u v label`, `L u`, `R u` or `V u`")),
        }
    }

    if sides.is_empty() {
        let g = EdgeOrderedGraph::with_names(names, edges)?;
        Ok(Parsed::Graph(g))
    } else {
        let mut side = Vec::with_capacity(names.len());
        for v in 0..names.len() {
            match sides.get(&v) {
                Some(&s) => side.push(s),
                None => return Err(Error::MissingSide(names[v].clone())),
            }
        }
        let g = EdgeOrderedGraph::with_names(names, edges)?;
        Ok(Parsed::Bigraph(EdgeOrderedBigraph::new(g, side)?))
    }
}

pub fn parse_graph(text: &str) -> Result<EdgeOrderedGraph> {
    match parse(text)? {
        Parsed::Graph(g) => Ok(g),
        Parsed::Bigraph(_) => Err(Error::BadArgument(
            "expected a plain graph, found side declarations".into(),
        )),
    }
}

pub fn parse_bigraph(text: &str) -> Result<EdgeOrderedBigraph> {
    match parse(text)? {
        Parsed::Bigraph(b) => Ok(b),
        Parsed::Graph(_) => Err(Error::BadArgument(
            "expected a bigraph, found no side declarations".into(),
        )),
    }
}

fn path_digits(spec: &str) -> Result<(Option<Side>, Vec<u64>)> {
    let bad = |msg: &str| Error::Parse {
        line: 1,
        msg: msg.to_string(),
    };
    let body = spec
        .trim()
        .strip_prefix("P:")
        .ok_or_else(|| bad("path shorthand must start with P:"))?;
    let (start, digits) = match body.strip_prefix('+') {
        Some(rest) => (Some(Side::Right), rest),
        None => match body.strip_prefix('-') {
            Some(rest) => (Some(Side::Left), rest),
            None => (None, body),
        },
    };
    let mut labels = Vec::new();
    for ch in digits.chars() {
        match ch.to_digit(10) {
            Some(d @ 1..=9) => labels.push(d as u64),
            _ => return Err(bad(&format!("bad digit {ch:?} in path shorthand"))),
        }
    }
    if labels.is_empty() {
        return Err(bad("path shorthand needs at least one digit"));
    }
    let mut seen = vec![false; labels.len() + 1];
    for &d in &labels {
        if d as usize > labels.len() || seen[d as usize] {
            return Err(bad("path digits must form a permutation of 1..=k"));
        }
        seen[d as usize] = true;
    }
    Ok((start, labels))
}

/// The path on `k+1` vertices whose i-th edge has the i-th digit as label.
pub fn parse_path(spec: &str) -> Result<EdgeOrderedGraph> {
    let (start, labels) = path_digits(spec)?;
    if start.is_some() {
        return Err(Error::BadArgument(
            "signed path shorthand denotes a bigraph".into(),
        ));
    }
    let edges: Vec<(usize, usize, u64)> =
        labels.iter().enumerate().map(|(i, &l)| (i, i + 1, l)).collect();
    EdgeOrderedGraph::new(labels.len() + 1, edges)
}

/// Signed variant: sides alternate from the declared starting side.
pub fn parse_signed_path(spec: &str) -> Result<EdgeOrderedBigraph> {
    let (start, labels) = path_digits(spec)?;
    let start = start.ok_or_else(|| Error::BadArgument(
        "unsigned path shorthand denotes a plain graph".into(),
    ))?;
    let edges: Vec<(usize, usize, u64)> =
        labels.iter().enumerate().map(|(i, &l)| (i, i + 1, l)).collect();
    let g = EdgeOrderedGraph::new(labels.len() + 1, edges)?;
    let side = (0..g.vertex_count())
        .map(|i| if i % 2 == 0 { start } else { start.flipped() })
        .collect();
    EdgeOrderedBigraph::new(g, side)
}

pub fn serialize_graph(g: &EdgeOrderedGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            writeln!(out, "V {}", g.name(v)).unwrap();
        }
    }
    for e in g.edges() {
        writeln!(out, "{} {} {}", g.name(e.u), g.name(e.v), e.label).unwrap();
    }
    out
}

pub fn serialize_bigraph(b: &EdgeOrderedBigraph) -> String {
    let g = b.graph();
    let mut out = String::new();
    for side in [Side::Left, Side::Right] {
        for v in 0..g.vertex_count() {
            if b.side(v) == side {
                let tag = if side == Side::Left { "L" } else { "R" };
                writeln!(out, "{tag} {}", g.name(v)).unwrap();
            }
        }
    }
    for e in g.edges() {
        writeln!(out, "{} {} {}", g.name(e.u), g.name(e.v), e.label).unwrap();
    }
    out
}

pub fn serialize(p: &Parsed) -> String {
    match p {
        Parsed::Graph(g) => serialize_graph(g),
        Parsed::Bigraph(b) => serialize_bigraph(b),
    }
}
