//! The coloring validity conditions.
//!
//! A total coloring is valid iff the black vertices induce a 1-regular
//! graph and the white vertices form an independent set; a partial
//! coloring is valid iff whites are independent, every black vertex has
//! at most one black neighbor, and every black vertex without a black
//! neighbor still has an uncolored neighbor to extend into.

use std::fmt;

use graph_core::Graph;

use crate::coloring::{Color, Coloring};
use crate::DimError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    WhiteAdjacent(usize, usize),
    BlackNoBlackNeighbor(usize),
    BlackTwoBlackNeighbors(usize),
    BlackNoUncoloredNeighbor(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::WhiteAdjacent(u, v) => write!(f, "WHITE-ADJACENT {u} {v}"),
            Violation::BlackNoBlackNeighbor(v) => write!(f, "BLACK-NO-BLACK-NEIGHBOR {v}"),
            Violation::BlackTwoBlackNeighbors(v) => {
                write!(f, "BLACK-TWO-BLACK-NEIGHBORS {v}")
            }
            Violation::BlackNoUncoloredNeighbor(v) => {
                write!(f, "BLACK-NO-UNCOLORED-NEIGHBOR {v}")
            }
        }
    }
}

/// First violation of the total-validity conditions in canonical order
/// (vertices ascending), or `None` when the coloring is valid.
pub fn validate_total(g: &Graph, c: &Coloring) -> Result<Option<Violation>, DimError> {
    assert_eq!(c.len(), g.n(), "coloring sized for a different graph");
    if let Some(v) = c.first_uncolored() {
        return Err(DimError::NotTotal { vertex: v });
    }
    for v in g.vertices() {
        match c.get(v).expect("total") {
            Color::White => {
                if let Some(w) = g.neighbors(v).find(|&w| w > v && c.get(w) == Some(Color::White))
                {
                    return Ok(Some(Violation::WhiteAdjacent(v, w)));
                }
            }
            Color::Black => {
                let black_nbrs = g.neighbors(v).filter(|&w| c.get(w) == Some(Color::Black)).count();
                match black_nbrs {
                    0 => return Ok(Some(Violation::BlackNoBlackNeighbor(v))),
                    1 => {}
                    _ => return Ok(Some(Violation::BlackTwoBlackNeighbors(v))),
                }
            }
        }
    }
    Ok(None)
}

/// First violation of the partial-validity conditions in canonical order,
/// or `None` when the partial coloring is valid. The empty coloring is
/// vacuously valid.
pub fn validate_partial(g: &Graph, c: &Coloring) -> Option<Violation> {
    assert_eq!(c.len(), g.n(), "coloring sized for a different graph");
    for v in g.vertices() {
        match c.get(v) {
            None => {}
            Some(Color::White) => {
                if let Some(w) = g.neighbors(v).find(|&w| w > v && c.get(w) == Some(Color::White))
                {
                    return Some(Violation::WhiteAdjacent(v, w));
                }
            }
            Some(Color::Black) => {
                let black_nbrs = g.neighbors(v).filter(|&w| c.get(w) == Some(Color::Black)).count();
                if black_nbrs >= 2 {
                    return Some(Violation::BlackTwoBlackNeighbors(v));
                }
                if black_nbrs == 0 && !g.neighbors(v).any(|w| c.get(w).is_none()) {
                    return Some(Violation::BlackNoUncoloredNeighbor(v));
                }
            }
        }
    }
    None
}

pub fn is_valid_total(g: &Graph, c: &Coloring) -> bool {
    matches!(validate_total(g, c), Ok(None))
}

pub fn is_valid_partial(g: &Graph, c: &Coloring) -> bool {
    validate_partial(g, c).is_none()
}
