//! Line-based `.hg` text format.
//!
//! ```text
//! # comment
//! e a b c      hyperedge over tokens a, b, c (at least two distinct)
//! c a 3        color of vertex a
//! v z          vertex with no edge and no color
//! ```
//! Vertices get dense ids in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use super::{ColoredHypergraph, Hypergraph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgFile {
    pub graph: Hypergraph,
    pub labels: Vec<String>,
    pub colors: Vec<Option<u32>>,
}

impl HgFile {
    /// Integer labels `0..n`, no colors.
    pub fn unlabeled(graph: Hypergraph) -> Self {
        let n = graph.num_vertices();
        HgFile {
            graph,
            labels: (0..n).map(|v| v.to_string()).collect(),
            colors: vec![None; n],
        }
    }

    pub fn from_colored(c: &ColoredHypergraph) -> Self {
        let mut f = Self::unlabeled(c.base.clone());
        f.colors = c.color.iter().map(|&x| Some(x)).collect();
        f
    }

    pub fn has_colors(&self) -> bool {
        self.colors.iter().any(Option::is_some)
    }

    /// Requires every vertex to carry a color. Color values are compressed
    /// to `0..h` preserving their order.
    pub fn colored(&self) -> Result<ColoredHypergraph> {
        let mut raw = Vec::with_capacity(self.colors.len());
        for (v, c) in self.colors.iter().enumerate() {
            match c {
                Some(c) => raw.push(*c),
                None => {
                    return Err(Error::input(format!("vertex {:?} has no color", self.labels[v])));
                }
            }
        }
        let mut palette = raw.clone();
        palette.sort_unstable();
        palette.dedup();
        let color = raw.iter().map(|c| palette.binary_search(c).unwrap() as u32).collect();
        ColoredHypergraph::new(self.graph.clone(), color)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut ids: HashMap<String, Vertex> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut colors: Vec<Option<u32>> = Vec::new();
        let mut edges: Vec<Vec<Vertex>> = Vec::new();
        let mut intern = |tok: &str, labels: &mut Vec<String>, colors: &mut Vec<Option<u32>>| {
            *ids.entry(tok.to_string()).or_insert_with(|| {
                labels.push(tok.to_string());
                colors.push(None);
                (labels.len() - 1) as Vertex
            })
        };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let kind = toks.next().unwrap();
            let rest: Vec<&str> = toks.collect();
            let err = |msg: String| Error::Parse { line: line_no, msg };
            match kind {
                "e" => {
                    let mut e: Vec<Vertex> =
                        rest.iter().map(|t| intern(t, &mut labels, &mut colors)).collect();
                    e.sort_unstable();
                    e.dedup();
                    if e.len() < 2 {
                        return Err(err(format!(
                            "hyperedge needs at least two distinct vertices, got {:?}",
                            rest
                        )));
                    }
                    edges.push(e);
                }
                "c" => {
                    let [tok, col] = rest[..] else {
                        return Err(err("expected `c <vertex> <color>`".into()));
                    };
                    let col: u32 = col
                        .parse()
                        .map_err(|_| err(format!("color {col:?} is not a non-negative integer")))?;
                    let v = intern(tok, &mut labels, &mut colors);
                    match colors[v as usize] {
                        Some(prev) if prev != col => {
                            return Err(err(format!("vertex {tok:?} colored twice ({prev} and {col})")));
                        }
                        _ => colors[v as usize] = Some(col),
                    }
                }
                "v" => {
                    if rest.is_empty() {
                        return Err(err("expected `v <vertex>...`".into()));
                    }
                    for t in rest {
                        intern(t, &mut labels, &mut colors);
                    }
                }
                other => return Err(err(format!("unknown line kind {other:?}"))),
            }
        }
        let graph = Hypergraph::new(labels.len(), edges)?;
        Ok(HgFile {
            graph,
            labels,
            colors,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Fails on arity-1 edges, which the format cannot express.
    pub fn render(&self) -> Result<String> {
        let mut out = String::new();
        let mut covered = vec![false; self.graph.num_vertices()];
        for e in self.graph.edges() {
            if e.len() < 2 {
                return Err(Error::input("arity-1 hyperedges cannot be written to .hg"));
            }
            out.push('e');
            for &v in e {
                covered[v as usize] = true;
                write!(out, " {}", self.labels[v as usize]).unwrap();
            }
            out.push('\n');
        }
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                writeln!(out, "c {} {c}", self.labels[v]).unwrap();
                covered[v] = true;
            }
        }
        for (v, seen) in covered.iter().enumerate() {
            if !seen {
                writeln!(out, "v {}", self.labels[v]).unwrap();
            }
        }
        Ok(out)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = self.render()?;
        std::fs::write(path, text)
            .map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
    }

    /// Edge set in terms of labels, for order-independent comparison.
    pub fn labeled_edges(&self) -> std::collections::BTreeSet<Vec<String>> {
        self.graph
            .edges()
            .iter()
            .map(|e| {
                let mut l: Vec<String> = e.iter().map(|&v| self.labels[v as usize].clone()).collect();
                l.sort();
                l
            })
            .collect()
    }
}
