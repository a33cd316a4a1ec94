//! Text and JSON formats: an unweighted SteinLib-style `.stp` dialect for
//! graphs, terminals, partitions and budgets, versioned JSON for cover
//! sources, and JSON sidecars carrying gadget metadata.
//!
//! Vertex ids are 1-based in `.stp` files and 0-based in memory.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{PartitionKind, SplitLikePartition};
use crate::cover::{ExactCoverInstance, TripleSystem};
use crate::error::{Error, Result};
use crate::exact::SteinerInstance;
use crate::gadgets::{ClaimedClass, CliqueGadget, ReductionArtifact, Source};
use crate::graph::{Graph, VertexSet};

pub const STP_MAGIC: &str = "33D32945 STP File, STP Format Version 1.0";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> std::result::Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StpDocument {
    pub graph: Graph,
    pub terminals: Option<VertexSet>,
    pub partition: Option<SplitLikePartition>,
    pub budget: Option<usize>,
    /// Lines of the `Comment` section, kept verbatim.
    pub comments: Vec<String>,
}

impl StpDocument {
    pub fn from_instance(inst: &SteinerInstance, partition: Option<SplitLikePartition>) -> Self {
        Self {
            graph: inst.graph().clone(),
            terminals: Some(inst.terminals().clone()),
            partition,
            budget: inst.budget(),
            comments: Vec::new(),
        }
    }

    pub fn instance(&self) -> Result<SteinerInstance> {
        let terminals = self
            .terminals
            .clone()
            .ok_or_else(|| Error::Precondition("document has no Terminals section".into()))?;
        SteinerInstance::new(self.graph.clone(), terminals, self.budget)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Section {
    Comment,
    Graph,
    Terminals,
    Partition,
    Budget,
}

impl Section {
    fn named(name: &str) -> Option<Self> {
        Some(match name.to_ascii_lowercase().as_str() {
            "comment" => Self::Comment,
            "graph" => Self::Graph,
            "terminals" => Self::Terminals,
            "partition" => Self::Partition,
            "budget" => Self::Budget,
            _ => return None,
        })
    }
}

/// Parses a `.stp` document. Every error carries the offending line.
pub fn parse_stp(text: &str) -> std::result::Result<StpDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    if let Some(&(_, first)) = lines.peek() {
        if first.starts_with("33D32945") {
            lines.next();
        }
    }

    let mut seen = HashSet::new();
    let mut graph = None;
    let mut terminals = None;
    let mut partition = None;
    let mut budget = None;
    let mut comments = Vec::new();
    let mut last_line = 0;
    loop {
        let Some((no, line)) = lines.next() else {
            return fail(last_line + 1, "missing EOF");
        };
        last_line = no;
        if line.eq_ignore_ascii_case("EOF") {
            if let Some((extra, _)) = lines.next() {
                return fail(extra, "content after EOF");
            }
            break;
        }
        let mut words = line.split_whitespace();
        if !words
            .next()
            .is_some_and(|w| w.eq_ignore_ascii_case("SECTION"))
        {
            return fail(no, format!("expected SECTION or EOF, found {line:?}"));
        }
        let name = words.next().unwrap_or("");
        let section = Section::named(name).ok_or_else(|| ParseError {
            line: no,
            message: format!("unknown section {name:?}"),
        })?;
        if !seen.insert(section) {
            return fail(no, format!("duplicate section {name}"));
        }
        let mut body = Vec::new();
        loop {
            let Some((bno, bline)) = lines.next() else {
                return fail(
                    last_line + 1,
                    format!("section {name} is not closed by END"),
                );
            };
            last_line = bno;
            if bline.eq_ignore_ascii_case("END") {
                break;
            }
            body.push((bno, bline));
        }
        match section {
            Section::Comment => comments = body.iter().map(|(_, l)| l.to_string()).collect(),
            Section::Graph => graph = Some(parse_graph(&body, no, last_line)?),
            Section::Terminals => terminals = Some((body, no, last_line)),
            Section::Partition => partition = Some((body, no)),
            Section::Budget => budget = Some(parse_budget(&body, no)?),
        }
    }
    let Some(graph) = graph else {
        return fail(last_line, "missing Graph section");
    };
    let terminals = terminals
        .map(|(body, start, end)| parse_terminals(&body, start, end, graph.n()))
        .transpose()?;
    let partition = partition
        .map(|(body, start)| parse_partition(&body, start, graph.n()))
        .transpose()?;
    Ok(StpDocument {
        graph,
        terminals,
        partition,
        budget,
        comments,
    })
}

fn key_value(line: &str) -> (&str, Vec<&str>) {
    let mut words = line.split_whitespace();
    let key = words.next().unwrap_or("");
    (key, words.collect())
}

fn number(no: usize, word: &str) -> std::result::Result<usize, ParseError> {
    word.parse().or_else(|_| {
        fail(
            no,
            format!("expected a non-negative integer, found {word:?}"),
        )
    })
}

fn vertex(no: usize, word: &str, n: usize) -> std::result::Result<usize, ParseError> {
    let id = number(no, word)?;
    if id == 0 || id > n {
        return fail(no, format!("vertex {id} outside 1..={n}"));
    }
    Ok(id - 1)
}

fn single(no: usize, key: &str, args: &[&str]) -> std::result::Result<usize, ParseError> {
    match args {
        [w] => number(no, w),
        _ => fail(no, format!("{key} takes exactly one value")),
    }
}

fn parse_graph(
    body: &[(usize, &str)],
    start: usize,
    end: usize,
) -> std::result::Result<Graph, ParseError> {
    let mut nodes = None;
    let mut declared = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for &(no, line) in body {
        let (key, args) = key_value(line);
        match key.to_ascii_lowercase().as_str() {
            "nodes" => nodes = Some(single(no, key, &args)?),
            "edges" => declared = Some(single(no, key, &args)?),
            "e" => {
                let n = nodes.ok_or_else(|| ParseError {
                    line: no,
                    message: "edge before Nodes".into(),
                })?;
                let m = declared.ok_or_else(|| ParseError {
                    line: no,
                    message: "edge before Edges".into(),
                })?;
                let (u, v) = match args.as_slice() {
                    [u, v] => (vertex(no, u, n)?, vertex(no, v, n)?),
                    [_, _, _] => return fail(no, "weighted edges are not supported"),
                    _ => return fail(no, "expected E u v"),
                };
                if edges.len() == m {
                    return fail(no, format!("more than the declared {m} edges"));
                }
                if u == v {
                    return fail(no, format!("self-loop on vertex {}", u + 1));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return fail(no, format!("duplicate edge {} {}", u + 1, v + 1));
                }
                edges.push((u, v));
            }
            "a" | "arcs" => return fail(no, "directed arcs are not supported"),
            _ => return fail(no, format!("unknown Graph entry {key:?}")),
        }
    }
    let n = nodes.ok_or_else(|| ParseError {
        line: start,
        message: "Graph section lacks Nodes".into(),
    })?;
    let m = declared.unwrap_or(0);
    if edges.len() != m {
        return fail(end, format!("declared {m} edges, found {}", edges.len()));
    }
    Graph::new(n, &edges).or_else(|e| fail(start, e.to_string()))
}

fn parse_terminals(
    body: &[(usize, &str)],
    start: usize,
    end: usize,
    n: usize,
) -> std::result::Result<VertexSet, ParseError> {
    let mut declared = None;
    let mut set = VertexSet::new();
    for &(no, line) in body {
        let (key, args) = key_value(line);
        match key.to_ascii_lowercase().as_str() {
            "terminals" => declared = Some(single(no, key, &args)?),
            "t" => {
                let t = match args.as_slice() {
                    [w] => vertex(no, w, n)?,
                    _ => return fail(no, "expected T u"),
                };
                if declared.is_some_and(|d| set.len() == d) {
                    return fail(
                        no,
                        format!("more than the declared {} terminals", set.len()),
                    );
                }
                if !set.insert(t) {
                    return fail(no, format!("duplicate terminal {}", t + 1));
                }
            }
            _ => return fail(no, format!("unknown Terminals entry {key:?}")),
        }
    }
    match declared {
        Some(d) if d != set.len() => {
            fail(end, format!("declared {d} terminals, found {}", set.len()))
        }
        None if !body.is_empty() => fail(start, "Terminals section lacks a count"),
        _ => Ok(set),
    }
}

fn parse_id_list(no: usize, words: &str, n: usize) -> std::result::Result<VertexSet, ParseError> {
    let mut set = VertexSet::new();
    for w in words.split_whitespace() {
        let v = vertex(no, w, n)?;
        if !set.insert(v) {
            return fail(no, format!("vertex {} listed twice", v + 1));
        }
    }
    Ok(set)
}

fn parse_partition(
    body: &[(usize, &str)],
    start: usize,
    n: usize,
) -> std::result::Result<SplitLikePartition, ParseError> {
    let mut kind = None;
    let mut parts = Vec::new();
    let mut independent = None;
    for &(no, line) in body {
        let (head, rest) = line.split_once(':').unwrap_or((line, ""));
        let (key, args) = key_value(head);
        match key.to_ascii_lowercase().as_str() {
            "kind" => {
                kind = Some(match args.as_slice() {
                    [k] if k.eq_ignore_ascii_case("clique") => PartitionKind::Clique,
                    [k] if k.eq_ignore_ascii_case("multipartite") => PartitionKind::Multipartite,
                    _ => return fail(no, "Kind must be clique or multipartite"),
                })
            }
            "part" => {
                let index = single(no, key, &args)?;
                if index != parts.len() + 1 {
                    return fail(no, format!("expected Part {}", parts.len() + 1));
                }
                parts.push(parse_id_list(no, rest, n)?);
            }
            "independent" => independent = Some(parse_id_list(no, rest, n)?),
            _ => return fail(no, format!("unknown Partition entry {key:?}")),
        }
    }
    let kind = kind.unwrap_or(PartitionKind::Multipartite);
    let independent = independent.ok_or_else(|| ParseError {
        line: start,
        message: "Partition section lacks Independent".into(),
    })?;
    if kind == PartitionKind::Clique && parts.len() != 1 {
        return fail(start, "a clique partition has exactly one part");
    }
    Ok(SplitLikePartition {
        kind,
        parts,
        independent,
    })
}

fn parse_budget(body: &[(usize, &str)], start: usize) -> std::result::Result<usize, ParseError> {
    match body {
        [(no, line)] => {
            let (key, args) = key_value(line);
            if !key.eq_ignore_ascii_case("k") {
                return fail(*no, format!("unknown Budget entry {key:?}"));
            }
            single(*no, key, &args)
        }
        _ => fail(start, "Budget section holds exactly one K line"),
    }
}

fn ids(set: &VertexSet) -> String {
    set.iter().map(|v| format!(" {}", v + 1)).collect()
}

/// Canonical rendering: edges ascending, terminals ascending, 1-based.
pub fn write_stp(doc: &StpDocument) -> String {
    let mut out = String::new();
    let mut w = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    w(STP_MAGIC.into());
    if !doc.comments.is_empty() {
        w(String::new());
        w("SECTION Comment".into());
        doc.comments.iter().for_each(|c| w(c.clone()));
        w("END".into());
    }
    w(String::new());
    w("SECTION Graph".into());
    w(format!("Nodes {}", doc.graph.n()));
    w(format!("Edges {}", doc.graph.edge_count()));
    for (u, v) in doc.graph.edges() {
        w(format!("E {} {}", u + 1, v + 1));
    }
    w("END".into());
    if let Some(terminals) = &doc.terminals {
        w(String::new());
        w("SECTION Terminals".into());
        w(format!("Terminals {}", terminals.len()));
        terminals.iter().for_each(|t| w(format!("T {}", t + 1)));
        w("END".into());
    }
    if let Some(p) = &doc.partition {
        w(String::new());
        w("SECTION Partition".into());
        w(format!(
            "Kind {}",
            match p.kind {
                PartitionKind::Clique => "clique",
                PartitionKind::Multipartite => "multipartite",
            }
        ));
        for (i, part) in p.parts.iter().enumerate() {
            w(format!("Part {}:{}", i + 1, ids(part)));
        }
        w(format!("Independent:{}", ids(&p.independent)));
        w("END".into());
    }
    if let Some(k) = doc.budget {
        w(String::new());
        w("SECTION Budget".into());
        w(format!("K {k}"));
        w("END".into());
    }
    w(String::new());
    w("EOF".into());
    out
}

#[derive(Serialize, Deserialize)]
struct Versioned<T> {
    format: u32,
    #[serde(flatten)]
    body: T,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let doc: Versioned<T> = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        message: e.to_string(),
    })?;
    if doc.format != FORMAT_VERSION {
        return Err(ParseError {
            line: 1,
            message: format!("unsupported format version {}", doc.format),
        }
        .into());
    }
    Ok(doc.body)
}

fn to_json<T: Serialize>(body: &T) -> String {
    let mut text = serde_json::to_string_pretty(&Versioned {
        format: FORMAT_VERSION,
        body,
    })
    .expect("in-memory values serialize");
    text.push('\n');
    text
}

/// Reads an exact cover or triple system and validates it.
pub fn parse_cover_json(text: &str) -> Result<Source> {
    match from_json::<Source>(text)? {
        Source::ExactCover(c) => {
            ExactCoverInstance::new(c.universe, c.set_size, c.occurrence_cap, c.subsets)
                .map(Source::ExactCover)
        }
        Source::TripleSystem(t) => TripleSystem::new(t.n, t.triples).map(Source::TripleSystem),
    }
}

pub fn write_cover_json(source: &Source) -> String {
    to_json(source)
}

/// Metadata the `.stp` file cannot carry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "artifact")]
pub enum Sidecar {
    Reduction {
        claimed_class: ClaimedClass,
        description: String,
        budget: usize,
        source: Source,
        vertex_names: Vec<String>,
        notes: Vec<String>,
    },
    Cliques {
        cliques: Vec<VertexSet>,
        source: TripleSystem,
        vertex_names: Vec<String>,
    },
}

/// `.stp` text and JSON sidecar for a reduction artifact.
pub fn write_artifact(art: &ReductionArtifact) -> (String, String) {
    let mut doc = StpDocument::from_instance(&art.instance, art.partition.clone());
    doc.comments = vec![format!("Class \"{}\"", art.claimed_class.describe())];
    let sidecar = Sidecar::Reduction {
        claimed_class: art.claimed_class,
        description: art.claimed_class.describe(),
        budget: art.budget(),
        source: art.source.clone(),
        vertex_names: art.vertex_names.clone(),
        notes: art.notes.clone(),
    };
    (write_stp(&doc), to_json(&sidecar))
}

pub fn write_clique_gadget(gadget: &CliqueGadget) -> (String, String) {
    let doc = StpDocument {
        graph: gadget.graph.clone(),
        terminals: None,
        partition: None,
        budget: None,
        comments: vec!["Class \"K_{1,4}-free chordal\"".into()],
    };
    let sidecar = Sidecar::Cliques {
        cliques: gadget.cliques.clone(),
        source: gadget.source.clone(),
        vertex_names: gadget.vertex_names.clone(),
    };
    (write_stp(&doc), to_json(&sidecar))
}

pub fn parse_sidecar(text: &str) -> Result<Sidecar> {
    from_json(text)
}

pub fn read_artifact(stp: &str, sidecar: &str) -> Result<ReductionArtifact> {
    let doc = parse_stp(stp)?;
    match parse_sidecar(sidecar)? {
        Sidecar::Reduction {
            claimed_class,
            budget,
            source,
            vertex_names,
            notes,
            ..
        } => {
            if doc.budget != Some(budget) {
                return Err(Error::Precondition(
                    "sidecar budget disagrees with the .stp file".into(),
                ));
            }
            if vertex_names.len() != doc.graph.n() {
                return Err(Error::Precondition(
                    "sidecar names do not match the vertex count".into(),
                ));
            }
            Ok(ReductionArtifact {
                instance: doc.instance()?,
                partition: doc.partition,
                claimed_class,
                source,
                vertex_names,
                notes,
            })
        }
        Sidecar::Cliques { .. } => Err(Error::Precondition(
            "sidecar describes a clique gadget, not a reduction".into(),
        )),
    }
}

pub fn read_clique_gadget(stp: &str, sidecar: &str) -> Result<CliqueGadget> {
    let doc = parse_stp(stp)?;
    match parse_sidecar(sidecar)? {
        Sidecar::Cliques {
            cliques,
            source,
            vertex_names,
        } => Ok(CliqueGadget {
            graph: doc.graph,
            cliques,
            vertex_names,
            source,
        }),
        Sidecar::Reduction { .. } => Err(Error::Precondition(
            "sidecar describes a reduction, not a clique gadget".into(),
        )),
    }
}

/// Human-readable one-line summary of a vertex set, 1-based like the files.
pub fn one_based(set: &VertexSet) -> String {
    let mut s = String::from("{");
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", v + 1);
    }
    s.push('}');
    s
}
