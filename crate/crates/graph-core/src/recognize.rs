//! Class recognizers: neighborhood-star-free (every vertex of degree at
//! least 2 lies in a triangle) and cricket-free.

use crate::graph::Graph;
use crate::induced::find_induced;
use crate::patterns::PatternId;

/// The smallest vertex of degree >= 2 whose closed neighborhood is a star
/// (i.e. the vertex is in no triangle), or `None` if the graph is NSF.
pub fn nsf_witness(g: &Graph) -> Option<usize> {
    for v in g.vertices() {
        if g.degree(v) < 2 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        let in_triangle = nbrs
            .iter()
            .enumerate()
            .any(|(i, &a)| nbrs[i + 1..].iter().any(|&b| g.has_edge(a, b)));
        if !in_triangle {
            return Some(v);
        }
    }
    None
}

pub fn is_nsf(g: &Graph) -> bool {
    nsf_witness(g).is_none()
}

/// The lexicographically least vertex set inducing a cricket, if any.
pub fn cricket_witness(g: &Graph) -> Option<Vec<usize>> {
    let cricket = PatternId::Cricket.graph().expect("fixed pattern");
    find_induced(g, &cricket).into_iter().next()
}

pub fn is_cricket_free(g: &Graph) -> bool {
    cricket_witness(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{path, PatternId};

    #[test]
    fn claw_is_not_nsf() {
        let claw = PatternId::Claw.graph().unwrap();
        assert_eq!(nsf_witness(&claw), Some(0));
    }

    #[test]
    fn paw_is_nsf() {
        assert!(is_nsf(&PatternId::Paw.graph().unwrap()));
    }

    #[test]
    fn p3_fails_at_middle_vertex() {
        assert_eq!(nsf_witness(&path(3).unwrap()), Some(1));
    }

    #[test]
    fn cricket_is_its_own_witness() {
        let cricket = PatternId::Cricket.graph().unwrap();
        assert_eq!(cricket_witness(&cricket), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn butterfly_and_k4_are_cricket_free() {
        assert!(is_cricket_free(&PatternId::Butterfly.graph().unwrap()));
        assert!(is_cricket_free(&PatternId::K4.graph().unwrap()));
    }

    #[test]
    fn snail_contains_a_cricket() {
        assert!(!is_cricket_free(&PatternId::Snail.graph().unwrap()));
    }

    #[test]
    fn nsf_matches_triangle_membership() {
        // a vertex of degree >= 2 passes iff it appears in some triangle
        for p in PatternId::fixed() {
            let g = p.graph().unwrap();
            let tris = crate::cycles::enumerate_triangles(&g);
            let witness = g.vertices().find(|&v| {
                g.degree(v) >= 2 && !tris.iter().any(|t| t.contains(&v))
            });
            assert_eq!(nsf_witness(&g), witness, "{p}");
        }
    }
}
