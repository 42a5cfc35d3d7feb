//! Seeded generators for test corpora. Callers pass an RNG they seeded
//! themselves, so identical seeds give identical corpora.

use rand::Rng;

use crate::graph::Graph;
use crate::recognize::{is_cricket_free, is_nsf};

/// Erdos-Renyi style random graph.
pub fn random_graph<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("generated edges are valid")
}

/// A random NSF cricket-free graph with at most `max_n` vertices and at
/// most `max_edges` edges. Candidates are assembled from random triangles
/// plus a few stray edges and rejection-sampled against the recognizers,
/// so pendants, isolated vertices and disconnected graphs all occur.
pub fn random_nsf_cricket_free<R: Rng>(max_n: usize, max_edges: usize, rng: &mut R) -> Graph {
    assert!(max_n >= 3);
    loop {
        let n = rng.random_range(3..=max_n);
        let mut edges = Vec::new();
        let triangles = rng.random_range(1..=n.div_ceil(2));
        for _ in 0..triangles {
            let mut verts = [0usize; 3];
            verts[0] = rng.random_range(0..n);
            loop {
                verts[1] = rng.random_range(0..n);
                if verts[1] != verts[0] {
                    break;
                }
            }
            loop {
                verts[2] = rng.random_range(0..n);
                if verts[2] != verts[0] && verts[2] != verts[1] {
                    break;
                }
            }
            edges.push((verts[0], verts[1]));
            edges.push((verts[1], verts[2]));
            edges.push((verts[0], verts[2]));
        }
        for _ in 0..rng.random_range(0..=2) {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v {
                edges.push((u, v));
            }
        }
        let g = Graph::build(n, &edges).expect("generated edges are valid");
        if g.edge_count() <= max_edges && is_nsf(&g) && is_cricket_free(&g) {
            return g;
        }
    }
}
