//! Simple undirected graphs, BFS distances and degree statistics.
//!
//! Vertices are dense indices `0..n`. Labels are display metadata only; every
//! algorithm in the crate works on indices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on `u < v`.
    pub(crate) fn from_predicate(
        n: usize,
        mut adjacent: impl FnMut(usize, usize) -> bool,
    ) -> Graph {
        let mut adj = vec![VertexSet::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameters(format!(
                "{} labels given for a graph of order {}",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`; the index itself when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Single-source hop counts; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, source: usize) -> Vec<u16> {
        let n = self.n();
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for w in self.adj[u].iter() {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = self
                .bfs(s)
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != UNREACHABLE)
                .map(|(v, _)| v)
                .collect();
            for &v in &comp {
                seen[v] = true;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// One BFS sweep per source.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(self.bfs(s));
        }
        DistanceMatrix { n, d }
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let max_degree = (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0);
        let min_degree = (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0);
        let is_regular = max_degree == min_degree;
        DegreeStats {
            max_degree,
            min_degree,
            is_regular,
            regular_degree: is_regular.then_some(max_degree),
        }
    }

    /// Edge-list text: `n m` followed by `m` lines `u v`.
    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            writeln!(s, "{u} {v}").unwrap();
        }
        s
    }

    pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let (n, m) = parse_two(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_two(line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line `{extra}`")));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json_value(json: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edge_list(json.n, &edges)?;
        match json.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        Graph::from_json_value(serde_json::from_str(s)?)
    }
}

fn parse_two(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|e| Error::Parse(format!("`{t}` in line `{line}`: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

/// On-disk JSON graph: `{"n": int, "edges": [[u,v],...], "labels": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Hop count marking an unreachable pair. Never participates in arithmetic.
pub const UNREACHABLE: u16 = u16::MAX;

/// Read access to pairwise hop counts.
///
/// Implemented by the dense BFS matrix and by closed-form oracles for
/// families where distances have a formula.
pub trait Distances {
    fn order(&self) -> usize;

    /// Hop count, or `None` for an unreachable pair.
    fn distance(&self, u: usize, v: usize) -> Option<u32>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry, possibly [`UNREACHABLE`].
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            UNREACHABLE => None,
            x => Some(x as u32),
        }
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }

    /// Largest hop count; errors when any pair is unreachable.
    pub fn diameter(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::Disconnected {
                components: self.component_count(),
            });
        }
        Ok(self.d.iter().copied().max().unwrap_or(0) as u32)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if !seen[s] {
                count += 1;
                for (v, &x) in self.row(s).iter().enumerate() {
                    if x != UNREACHABLE {
                        seen[v] = true;
                    }
                }
            }
        }
        count
    }
}

impl Distances for DistanceMatrix {
    fn order(&self) -> usize {
        self.n
    }

    fn distance(&self, u: usize, v: usize) -> Option<u32> {
        self.get(u, v)
    }
}
