//! The named small-graph library. Constructions are frozen so that every
//! caller (tests, generators, the recognizers) sees identical vertex
//! numberings.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternId {
    K3,
    K4,
    W4,
    W5,
    Gem,
    Diamond,
    Butterfly,
    Paw,
    Claw,
    Cricket,
    K15,
    H,
    H2,
    Snail,
    Press,
    /// Chordless cycle `C_k`, `k >= 3`.
    Cycle(usize),
    /// Path `P_k` on `k` vertices, `k >= 1`.
    Path(usize),
}

impl PatternId {
    /// The fixed (non-parameterized) patterns, in canonical order.
    pub fn fixed() -> Vec<PatternId> {
        use PatternId::*;
        vec![
            K3, K4, W4, W5, Gem, Diamond, Butterfly, Paw, Claw, Cricket, K15, H, H2, Snail, Press,
        ]
    }

    pub fn name(&self) -> String {
        match self {
            PatternId::K3 => "K3".into(),
            PatternId::K4 => "K4".into(),
            PatternId::W4 => "W4".into(),
            PatternId::W5 => "W5".into(),
            PatternId::Gem => "gem".into(),
            PatternId::Diamond => "diamond".into(),
            PatternId::Butterfly => "butterfly".into(),
            PatternId::Paw => "paw".into(),
            PatternId::Claw => "claw".into(),
            PatternId::Cricket => "cricket".into(),
            PatternId::K15 => "K15".into(),
            PatternId::H => "H".into(),
            PatternId::H2 => "H2".into(),
            PatternId::Snail => "snail".into(),
            PatternId::Press => "press".into(),
            PatternId::Cycle(k) => format!("cycle:{k}"),
            PatternId::Path(k) => format!("path:{k}"),
        }
    }

    /// The canonical graph for this pattern.
    pub fn graph(&self) -> Result<Graph, GraphError> {
        let g = match *self {
            PatternId::K3 => complete(3),
            PatternId::K4 => complete(4),
            PatternId::W4 => wheel(4),
            PatternId::W5 => wheel(5),
            // P4 0-1-2-3 plus the universal vertex 4.
            PatternId::Gem => build(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
            // K4 minus the edge 2-3.
            PatternId::Diamond => build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            // Two triangles sharing the central vertex 0.
            PatternId::Butterfly => build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
            // Triangle 0,1,2 plus the pendant 3 on 0.
            PatternId::Paw => build(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
            PatternId::Claw => star(3),
            // Triangle 0,1,2 plus two pendants on 0.
            PatternId::Cricket => build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
            PatternId::K15 => star(5),
            PatternId::H => h_graph(1)?,
            PatternId::H2 => h_graph(2)?,
            // Triangle 0,1,2; pendant 3 on 0; pendants 4 and 5 on 1.
            PatternId::Snail => build(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (1, 5)]),
            // Two paws (triangle 0,1,2 + pendant 3 on 2; triangle 4,5,6 +
            // pendant 7 on 6) joined by the edge 1-4 between degree-2
            // vertices.
            PatternId::Press => build(
                8,
                &[(0, 1), (0, 2), (1, 2), (2, 3), (4, 5), (4, 6), (5, 6), (6, 7), (1, 4)],
            ),
            PatternId::Cycle(k) => return cycle(k),
            PatternId::Path(k) => return path(k),
        };
        Ok(g)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for PatternId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GraphError::UnknownPattern(s.to_string());
        if let Some((family, arg)) = s.split_once(':') {
            let k: usize = arg.parse().map_err(|_| unknown())?;
            return match family.to_ascii_lowercase().as_str() {
                "cycle" if k >= 3 => Ok(PatternId::Cycle(k)),
                "path" if k >= 1 => Ok(PatternId::Path(k)),
                _ => Err(unknown()),
            };
        }
        match s.to_ascii_lowercase().as_str() {
            "k3" => Ok(PatternId::K3),
            "k4" | "w3" => Ok(PatternId::K4),
            "w4" => Ok(PatternId::W4),
            "w5" => Ok(PatternId::W5),
            "gem" => Ok(PatternId::Gem),
            "diamond" => Ok(PatternId::Diamond),
            "butterfly" => Ok(PatternId::Butterfly),
            "paw" => Ok(PatternId::Paw),
            "claw" => Ok(PatternId::Claw),
            "cricket" => Ok(PatternId::Cricket),
            "k15" => Ok(PatternId::K15),
            "h" => Ok(PatternId::H),
            "h2" => Ok(PatternId::H2),
            "snail" => Ok(PatternId::Snail),
            "press" => Ok(PatternId::Press),
            _ => Err(unknown()),
        }
    }
}

pub fn named_graph(p: PatternId) -> Result<Graph, GraphError> {
    p.graph()
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::build(n, edges).expect("pattern construction is valid")
}

pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    build(k, &edges)
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    build(k + 1, &edges)
}

pub fn cycle(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::UnknownPattern(format!("cycle:{k}")));
    }
    let edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    Ok(build(k, &edges))
}

pub fn path(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::UnknownPattern(format!("path:{k}")));
    }
    let edges: Vec<_> = (0..k.saturating_sub(1)).map(|v| (v, v + 1)).collect();
    Ok(build(k, &edges))
}

/// Wheel `W_k`: a `C_k` on 0..k plus the universal vertex `k`.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    edges.extend((0..k).map(|v| (v, k)));
    build(k + 1, &edges)
}

/// `H_k`: two `P_3`s (0-1-2 and 3-4-5) whose middle vertices 1 and 4 are
/// joined by a path with `k - 1` internal vertices. `h_graph(1)` is the
/// `H` graph itself.
pub fn h_graph(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::UnknownPattern(format!("h:{k}")));
    }
    let mut edges = vec![(0, 1), (1, 2), (3, 4), (4, 5)];
    let mut prev = 1;
    for i in 0..k - 1 {
        edges.push((prev, 6 + i));
        prev = 6 + i;
    }
    edges.push((prev, 4));
    Ok(build(6 + k - 1, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Vertex/edge counts read off the reference drawings.
    #[test]
    fn pattern_orders_and_sizes() {
        let expect = [
            (PatternId::K3, 3, 3),
            (PatternId::K4, 4, 6),
            (PatternId::W4, 5, 8),
            (PatternId::W5, 6, 10),
            (PatternId::Gem, 5, 7),
            (PatternId::Diamond, 4, 5),
            (PatternId::Butterfly, 5, 6),
            (PatternId::Paw, 4, 4),
            (PatternId::Claw, 4, 3),
            (PatternId::Cricket, 5, 5),
            (PatternId::K15, 6, 5),
            (PatternId::H, 6, 5),
            (PatternId::H2, 7, 6),
            (PatternId::Snail, 6, 6),
            (PatternId::Press, 8, 9),
        ];
        for (p, n, m) in expect {
            let g = p.graph().unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{p}");
        }
    }

    #[test]
    fn butterfly_shape() {
        let g = PatternId::Butterfly.graph().unwrap();
        let deg4: Vec<_> = g.vertices().filter(|&v| g.degree(v) == 4).collect();
        assert_eq!(deg4, vec![0]);
        assert!(g.vertices().filter(|&v| v != 0).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn cricket_shape() {
        let g = PatternId::Cricket.graph().unwrap();
        let pendants: Vec<_> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
        assert_eq!(pendants.len(), 2);
        // both pendants hang off the same triangle vertex
        let att: Vec<usize> = pendants
            .iter()
            .map(|&v| g.neighbors(v).next().unwrap())
            .collect();
        assert_eq!(att[0], att[1]);
        assert!(!g.has_edge(pendants[0], pendants[1]));
    }

    #[test]
    fn press_is_two_paws_and_a_bridge() {
        let g = PatternId::Press.graph().unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.vertices().filter(|&v| g.degree(v) == 1).count(), 2);
        assert_eq!(g.vertices().filter(|&v| g.degree(v) == 3).count(), 4);
    }

    #[test]
    fn parse_round_trip() {
        for p in PatternId::fixed() {
            assert_eq!(p.name().parse::<PatternId>().unwrap(), p);
        }
        assert_eq!("cycle:9".parse::<PatternId>().unwrap(), PatternId::Cycle(9));
        assert_eq!("path:7".parse::<PatternId>().unwrap(), PatternId::Path(7));
        assert!("cycle:2".parse::<PatternId>().is_err());
        assert!("hexagon".parse::<PatternId>().is_err());
    }

    #[test]
    fn h_family() {
        assert_eq!(h_graph(1).unwrap(), PatternId::H.graph().unwrap());
        let h3 = h_graph(3).unwrap();
        assert_eq!(h3.n(), 8);
        assert_eq!(h3.edge_count(), 7);
        // exactly k - 1 new degree-2 vertices on the middle path
        assert_eq!(h3.vertices().filter(|&v| h3.degree(v) == 2).count(), 2);
    }
}
