//! Triangle and bounded chordless-cycle enumeration.

use crate::graph::Graph;

/// Every vertex triple inducing a triangle, in lexicographic order.
pub fn enumerate_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            for w in g.neighbors(u).filter(|&w| w > v) {
                if g.has_edge(v, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// Lengths of all chordless cycles with length in `4..=max_len`, sorted
/// ascending (triangles are excluded; see [`enumerate_triangles`]).
///
/// Each cycle is found from its minimum vertex, walking only through
/// larger vertices, and counted once by orienting toward the smaller of
/// the two possible second vertices.
pub fn induced_cycles_up_to(g: &Graph, max_len: usize) -> Vec<usize> {
    let mut lengths = Vec::new();
    if max_len < 4 {
        return lengths;
    }
    let mut path = Vec::new();
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        path.clear();
        path.push(s);
        on_path[s] = true;
        for v in g.neighbors(s).filter(|&v| v > s).collect::<Vec<_>>() {
            path.push(v);
            on_path[v] = true;
            chordless_walk(g, s, &mut path, &mut on_path, max_len, &mut lengths);
            path.pop();
            on_path[v] = false;
        }
        on_path[s] = false;
    }
    lengths.sort_unstable();
    lengths
}

fn chordless_walk(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    max_len: usize,
    lengths: &mut Vec<usize>,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(last, start) {
        // closing edge present: any further vertex would make it a chord
        if path.len() >= 4 && path[1] < last {
            lengths.push(path.len());
        }
        return;
    }
    if path.len() == max_len {
        return;
    }
    for w in g.neighbors(last) {
        if w <= start || on_path[w] {
            continue;
        }
        // w must see only the path tip (the closing edge to start is fine,
        // it just forces the walk to close next step)
        if path[1..path.len() - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        chordless_walk(g, start, path, on_path, max_len, lengths);
        path.pop();
        on_path[w] = false;
    }
}
