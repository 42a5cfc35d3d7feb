//! Edge-domination predicates and the coloring <-> edge-set conversions.
//!
//! An edge dominates itself and every edge sharing an endpoint with it.
//! An edge set is a DIM (equivalently an EED) when every edge of the
//! graph is dominated exactly once; it is a PED when every edge *outside*
//! the set is dominated exactly once.

use std::fmt;

use graph_core::{Edge, Graph};

use crate::coloring::{Color, Coloring};
use crate::edgeset::EdgeSet;
use crate::validate::validate_total;
use crate::DimError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PedClass {
    /// The whole edge set.
    Trivial,
    /// Also an efficient edge dominating set (a DIM).
    Eed,
    /// Neither trivial nor an EED.
    Proper,
}

impl PedClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PedClass::Trivial => "trivial",
            PedClass::Eed => "eed",
            PedClass::Proper => "proper",
        }
    }
}

impl fmt::Display for PedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationViolation {
    NotAnEdge(Edge),
    Undominated(Edge),
    DominatedTwice(Edge),
}

impl fmt::Display for DominationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DominationViolation::NotAnEdge(e) => write!(f, "NOT-AN-EDGE {} {}", e.u(), e.v()),
            DominationViolation::Undominated(e) => write!(f, "UNDOMINATED {} {}", e.u(), e.v()),
            DominationViolation::DominatedTwice(e) => {
                write!(f, "DOMINATED-TWICE {} {}", e.u(), e.v())
            }
        }
    }
}

fn domination_count(d: &EdgeSet, e: Edge) -> usize {
    d.iter().filter(|&f| f == e || f.adjacent(e)).count()
}

/// First DIM violation in canonical edge order, `None` if `d` is a DIM.
pub fn dim_violation(g: &Graph, d: &EdgeSet) -> Option<DominationViolation> {
    for e in d.iter() {
        if !g.has_edge(e.u(), e.v()) {
            return Some(DominationViolation::NotAnEdge(e));
        }
    }
    for e in g.edges() {
        match domination_count(d, e) {
            0 => return Some(DominationViolation::Undominated(e)),
            1 => {}
            _ => return Some(DominationViolation::DominatedTwice(e)),
        }
    }
    None
}

pub fn is_dim(g: &Graph, d: &EdgeSet) -> Result<bool, DimError> {
    d.check_membership(g)?;
    Ok(dim_violation(g, d).is_none())
}

/// First PED violation in canonical edge order, restricted to edges
/// outside `d`.
pub fn ped_violation(g: &Graph, d: &EdgeSet) -> Option<DominationViolation> {
    for e in d.iter() {
        if !g.has_edge(e.u(), e.v()) {
            return Some(DominationViolation::NotAnEdge(e));
        }
    }
    for e in g.edges() {
        if d.contains(e) {
            continue;
        }
        match domination_count(d, e) {
            0 => return Some(DominationViolation::Undominated(e)),
            1 => {}
            _ => return Some(DominationViolation::DominatedTwice(e)),
        }
    }
    None
}

pub fn is_ped(g: &Graph, d: &EdgeSet) -> Result<bool, DimError> {
    d.check_membership(g)?;
    Ok(ped_violation(g, d).is_none())
}

pub fn classify_ped(g: &Graph, d: &EdgeSet) -> Result<PedClass, DimError> {
    if !is_ped(g, d)? {
        return Err(DimError::NotAPed);
    }
    if d.len() == g.edge_count() {
        Ok(PedClass::Trivial)
    } else if dim_violation(g, d).is_none() {
        Ok(PedClass::Eed)
    } else {
        Ok(PedClass::Proper)
    }
}

/// Bi-coloring associated to a DIM: a vertex is black iff it has an
/// incident edge in `d`, white otherwise.
pub fn coloring_from_dim(g: &Graph, d: &EdgeSet) -> Result<Coloring, DimError> {
    if !is_dim(g, d)? {
        return Err(DimError::NotADim);
    }
    let mut c = Coloring::new(g.n());
    for v in g.vertices() {
        c.set(v, Color::White);
    }
    for e in d.iter() {
        c.set(e.u(), Color::Black);
        c.set(e.v(), Color::Black);
    }
    Ok(c)
}

/// Edges with both endpoints black. No validity requirement; this is the
/// raw extraction used when cross-checking the validity conditions.
pub fn black_black_edges(g: &Graph, c: &Coloring) -> EdgeSet {
    g.edges()
        .into_iter()
        .filter(|e| {
            c.get(e.u()) == Some(Color::Black) && c.get(e.v()) == Some(Color::Black)
        })
        .collect()
}

/// The DIM associated to a valid total coloring.
pub fn dim_from_coloring(g: &Graph, c: &Coloring) -> Result<EdgeSet, DimError> {
    if let Some(violation) = validate_total(g, c)? {
        return Err(DimError::InvalidColoring(violation));
    }
    Ok(black_black_edges(g, c))
}
