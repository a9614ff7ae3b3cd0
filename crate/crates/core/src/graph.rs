//! Undirected simple graphs with string labels, plus edge-list I/O.
//!
//! Nodes get dense indices `0..N` in order of first appearance. Adjacency
//! lists are kept sorted so neighbour queries are binary searches and every
//! traversal is deterministic.

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_rational::Ratio;

use crate::degree::DegreeSequence;
use crate::error::{Error, Result};

/// Options for [`load_edge_list`].
#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    /// Accept graphs with more than one connected component.
    pub allow_disconnected: bool,
}

/// An immutable undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph on `n` nodes labelled `"0".."n-1"`.
    ///
    /// Self-loops and repeated edges are rejected; the `line` field of the
    /// error carries the 1-based position of the offending edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut builder = Builder::with_labels(labels);
        for (pos, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfBounds { requested: w, len: n });
                }
            }
            builder.add(u, v, pos + 1)?;
        }
        Ok(builder.finish())
    }

    /// Builds a graph from labelled edges; nodes are indexed by first appearance.
    pub fn from_labeled_edges<'a, I>(edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut builder = Builder::default();
        for (pos, (a, b)) in edges.into_iter().enumerate() {
            let u = builder.intern(a);
            let v = builder.intern(b);
            builder.add(u, v, pos + 1)?;
        }
        Ok(builder.finish())
    }

    /// Rebuilds a graph over the same labels from an edge set that is known
    /// to be simple (used by the rewiring code).
    pub(crate) fn with_same_labels(&self, adjacency: Vec<Vec<usize>>) -> Graph {
        let mut adjacency = adjacency;
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            edge_count,
            labels: self.labels.clone(),
            index: self.index.clone(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbour indices of `node`.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_graph(self)
    }

    /// Edge density `2M / (N(N-1))` as an exact fraction.
    pub fn density(&self) -> Result<Ratio<u64>> {
        density(self)
    }

    /// Number of connected components (isolated nodes count as components).
    pub fn component_count(&self) -> usize {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        components
    }

    /// Graphs with at most one node count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

/// Edge density `2M / (N(N-1))`; errors when `N < 2`.
pub fn density(g: &Graph) -> Result<Ratio<u64>> {
    let n = g.node_count() as u64;
    if n < 2 {
        return Err(Error::UndefinedDensity { nodes: n as usize });
    }
    Ok(Ratio::new(2 * g.edge_count() as u64, n * (n - 1)))
}

#[derive(Default)]
struct Builder {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    seen: HashSet<(usize, usize)>,
}

impl Builder {
    fn with_labels(labels: Vec<String>) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Builder {
            adjacency: vec![Vec::new(); labels.len()],
            labels,
            index,
            seen: HashSet::new(),
        }
    }

    fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        self.adjacency.push(Vec::new());
        i
    }

    fn add(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop {
                line,
                label: self.labels[u].clone(),
            });
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge {
                line,
                a: self.labels[u].clone(),
                b: self.labels[v].clone(),
            });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    fn finish(mut self) -> Graph {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
        Graph {
            edge_count: self.seen.len(),
            adjacency: self.adjacency,
            labels: self.labels,
            index: self.index,
        }
    }
}

/// Parses a whitespace-separated edge list.
///
/// Blank lines and lines whose first non-blank character is `#` are skipped.
/// Every other line must contain exactly two labels.
pub fn load_edge_list<R: BufRead>(source: R, options: LoadOptions) -> Result<Graph> {
    let mut builder = Builder::default();
    for (i, line) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two node labels, found '{trimmed}'"),
                })
            }
        };
        let u = builder.intern(a);
        let v = builder.intern(b);
        builder.add(u, v, line_no)?;
    }
    let graph = builder.finish();
    if !options.allow_disconnected {
        let components = graph.component_count();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
    }
    Ok(graph)
}

pub fn read_edge_list<P: AsRef<Path>>(path: P, options: LoadOptions) -> Result<Graph> {
    let file = File::open(path)?;
    load_edge_list(BufReader::new(file), options)
}

/// Writes one `label label` line per edge, in [`Graph::edges`] order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    out.flush()?;
    Ok(())
}
