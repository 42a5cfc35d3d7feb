//! Induced-pattern detection by exhaustive subset search. All patterns of
//! interest are small (at most a dozen vertices), so candidate subsets are
//! filtered by degree multiset and then checked with a backtracking
//! isomorphism test.

use itertools::Itertools;

use crate::graph::Graph;

/// Every vertex set of `g` inducing a subgraph isomorphic to `pattern`,
/// one entry per vertex set, sorted lexicographically.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Vec<Vec<usize>> {
    let k = pattern.n();
    if k == 0 || k > g.n() {
        return Vec::new();
    }
    let pat = Small::of(pattern, &(0..k).collect::<Vec<_>>());
    let mut pat_degs: Vec<usize> = pat.deg.clone();
    pat_degs.sort_unstable();

    let candidates: Vec<Vec<usize>> = if pattern.is_connected() {
        connected_subsets(g, k)
    } else {
        g.vertices().combinations(k).collect()
    };

    let mut out = Vec::new();
    for s in candidates {
        let sub = Small::of(g, &s);
        let mut degs = sub.deg.clone();
        degs.sort_unstable();
        if degs != pat_degs {
            continue;
        }
        if isomorphic_small(&pat, &sub) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Isomorphism test for small graphs (at most 64 vertices).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let sa = Small::of(a, &a.vertices().collect::<Vec<_>>());
    let sb = Small::of(b, &b.vertices().collect::<Vec<_>>());
    let mut da = sa.deg.clone();
    let mut db = sb.deg.clone();
    da.sort_unstable();
    db.sort_unstable();
    da == db && isomorphic_small(&sa, &sb)
}

/// Adjacency of an induced subgraph as bitmask rows over local ids.
struct Small {
    k: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
}

impl Small {
    fn of(g: &Graph, verts: &[usize]) -> Small {
        let k = verts.len();
        assert!(k <= 64, "pattern search is limited to 64 vertices");
        let mut adj = vec![0u64; k];
        for i in 0..k {
            for j in i + 1..k {
                if g.has_edge(verts[i], verts[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        let deg = adj.iter().map(|m| m.count_ones() as usize).collect();
        Small { k, adj, deg }
    }
}

/// Backtracking bijection search: map vertices of `a` (highest degree
/// first) onto vertices of `b`, keeping adjacency to everything already
/// mapped consistent.
fn isomorphic_small(a: &Small, b: &Small) -> bool {
    let mut order: Vec<usize> = (0..a.k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.deg[v]));
    let mut map = vec![usize::MAX; a.k];
    let mut used = vec![false; b.k];
    extend_iso(a, b, &order, 0, &mut map, &mut used)
}

fn extend_iso(
    a: &Small,
    b: &Small,
    order: &[usize],
    pos: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    'cand: for w in 0..b.k {
        if used[w] || a.deg[v] != b.deg[w] {
            continue;
        }
        for &p in &order[..pos] {
            let adj_a = a.adj[v] >> p & 1;
            let adj_b = b.adj[w] >> map[p] & 1;
            if adj_a != adj_b {
                continue 'cand;
            }
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(a, b, order, pos + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// All connected vertex sets of size `k`, each emitted exactly once
/// (the ESU enumeration scheme).
pub(crate) fn connected_subsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for v in g.vertices() {
        let mut sub = vec![v];
        let ext: Vec<usize> = g.neighbors(v).filter(|&w| w > v).collect();
        esu_extend(g, v, &mut sub, ext, k, &mut out);
    }
    out
}

fn esu_extend(
    g: &Graph,
    root: usize,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    k: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if sub.len() == k {
        let mut s = sub.clone();
        s.sort_unstable();
        out.push(s);
        return;
    }
    while let Some(w) = ext.pop() {
        // exclusive neighborhood: neighbors of w not adjacent to (or in)
        // the current subgraph
        let mut next_ext = ext.clone();
        for u in g.neighbors(w) {
            if u > root
                && u != w
                && !sub.contains(&u)
                && !sub.iter().any(|&s| g.has_edge(s, u))
            {
                next_ext.push(u);
            }
        }
        sub.push(w);
        esu_extend(g, root, sub, next_ext, k, out);
        sub.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{cycle, PatternId};

    fn pat(p: PatternId) -> Graph {
        p.graph().unwrap()
    }

    #[test]
    fn gem_contains_two_diamonds() {
        let hits = find_induced(&pat(PatternId::Gem), &pat(PatternId::Diamond));
        assert_eq!(hits.len(), 2);
    }

    #[test]
    fn butterfly_contains_four_paws() {
        // every vertex removal except the center leaves a paw
        let hits = find_induced(&pat(PatternId::Butterfly), &pat(PatternId::Paw));
        assert_eq!(hits.len(), 4);
    }

    #[test]
    fn c4_has_no_triangle() {
        let hits = find_induced(&cycle(4).unwrap(), &pat(PatternId::K3));
        assert!(hits.is_empty());
    }

    #[test]
    fn w4_diamonds_and_k4s() {
        let w4 = pat(PatternId::W4);
        assert_eq!(find_induced(&w4, &pat(PatternId::Diamond)).len(), 4);
        assert_eq!(find_induced(&w4, &pat(PatternId::K4)).len(), 0);
    }

    #[test]
    fn w5_contains_gem_but_not_w4() {
        let w5 = pat(PatternId::W5);
        assert!(!find_induced(&w5, &pat(PatternId::Gem)).is_empty());
        assert!(find_induced(&w5, &pat(PatternId::W4)).is_empty());
    }

    #[test]
    fn butterfly_minus_center_is_2k2() {
        let b = pat(PatternId::Butterfly);
        let (g, _) = b.induced(&[1, 2, 3, 4]).unwrap();
        let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_isomorphic(&g, &two_k2));
        // a disconnected pattern exercises the combinations fallback
        assert_eq!(find_induced(&b, &two_k2).len(), 1);
    }

    #[test]
    fn self_occurrence() {
        for p in PatternId::fixed() {
            let g = pat(p);
            let hits = find_induced(&g, &g);
            assert_eq!(hits.len(), 1, "{p}");
            assert_eq!(hits[0], g.vertices().collect::<Vec<_>>());
        }
    }

    #[test]
    fn connected_subsets_match_filtered_combinations() {
        let g = pat(PatternId::Press);
        for k in 1..=5 {
            let mut esu = connected_subsets(&g, k);
            esu.sort();
            let brute: Vec<Vec<usize>> = g
                .vertices()
                .combinations(k)
                .filter(|s| g.induced(s).unwrap().0.is_connected())
                .collect();
            assert_eq!(esu, brute, "k={k}");
        }
    }

    #[test]
    fn iso_rejects_non_isomorphic_same_degrees() {
        // C6 and 2K3 share the degree sequence but are not isomorphic
        let c6 = cycle(6).unwrap();
        let two_k3 =
            Graph::build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_k3));
    }
}
