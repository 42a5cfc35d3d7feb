use std::collections::BTreeSet;
use std::fmt;

use graph_core::{Edge, Graph};

use crate::DimError;

/// A set of edges of some host graph, kept in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeSet {
    edges: BTreeSet<Edge>,
}

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet::default()
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(iter: I) -> EdgeSet {
        EdgeSet { edges: iter.into_iter().collect() }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_edges(pairs.iter().map(|&(u, v)| Edge::new(u, v)))
    }

    /// The full edge set of `g` (the trivial PED).
    pub fn full(g: &Graph) -> EdgeSet {
        EdgeSet::from_edges(g.edges())
    }

    pub fn insert(&mut self, e: Edge) {
        self.edges.insert(e);
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    /// First member that is not an edge of `g`, if any.
    pub fn check_membership(&self, g: &Graph) -> Result<(), DimError> {
        for e in self.iter() {
            if !g.has_edge(e.u(), e.v()) {
                return Err(DimError::NotAnEdge(e.u(), e.v()));
            }
        }
        Ok(())
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> EdgeSet {
        EdgeSet::from_edges(iter)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}
