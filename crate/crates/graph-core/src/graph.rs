use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    OutOfRange { vertex: usize, n: usize },
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
}

/// Advisory role tag for vertices of reduction outputs. Graph algorithms
/// never consult these; they exist so traces and output files can say
/// where a vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Role {
    #[default]
    Plain,
    Circle,
    ClauseTriangle,
    VertexTriangle,
    Chain,
    Gadget,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Plain => "plain",
            Role::Circle => "circle",
            Role::ClauseTriangle => "clause-triangle",
            Role::VertexTriangle => "vertex-triangle",
            Role::Chain => "chain",
            Role::Gadget => "gadget",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "plain" => Role::Plain,
            "circle" => Role::Circle,
            "clause-triangle" => Role::ClauseTriangle,
            "vertex-triangle" => Role::VertexTriangle,
            "chain" => Role::Chain,
            "gadget" => Role::Gadget,
            _ => return None,
        })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Undirected edge, stored with the smaller endpoint first so that edges
/// sort canonically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a self-loop; loops are rejected earlier by the builders.
    pub fn new(u: usize, v: usize) -> Edge {
        assert!(u != v, "self-loop at vertex {u}");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn touches(self, w: usize) -> bool {
        self.0 == w || self.1 == w
    }

    /// True iff the two edges share an endpoint (and are distinct).
    pub fn adjacent(self, other: Edge) -> bool {
        self != other
            && (self.touches(other.0) || self.touches(other.1))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple undirected graph on vertices `0..n`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    labels: Vec<Role>,
}

impl Graph {
    /// Builds a simple graph; duplicate edge pairs collapse, self-loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::build_labeled(n, edges, vec![Role::Plain; n])
    }

    pub fn build_labeled(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<Role>,
    ) -> Result<Graph, GraphError> {
        assert_eq!(labels.len(), n, "one label per vertex");
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Neighbors in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// All edges in canonical (lexicographic) order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in self.adj[u].range(u + 1..) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Role {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Role] {
        &self.labels
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    /// Subgraph induced by `s`, with vertices relabeled densely in
    /// ascending order of their old ids. Returns the new graph and the
    /// remap table `new id -> old id`. Labels carry over.
    pub fn induced(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut remap: Vec<usize> = s.to_vec();
        remap.sort_unstable();
        remap.dedup();
        for &v in &remap {
            self.check_vertex(v)?;
        }
        let index_of = |v: usize| remap.binary_search(&v).unwrap();
        let mut edges = Vec::new();
        for (i, &v) in remap.iter().enumerate() {
            for &w in self.adj[v].range(v + 1..) {
                if remap.binary_search(&w).is_ok() {
                    edges.push((i, index_of(w)));
                }
            }
        }
        let labels = remap.iter().map(|&v| self.labels[v]).collect();
        let g = Graph::build_labeled(remap.len(), &edges, labels)?;
        Ok((g, remap))
    }
}
