//! Property tests backed by independent brute-force oracles.

use itertools::Itertools;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use graph_core::random::random_graph;
use graph_core::{enumerate_triangles, find_induced, is_nsf, Graph, PatternId};

/// Oracle isomorphism check: try every bijection.
fn permutation_isomorphic(g: &Graph, verts: &[usize], pattern: &Graph) -> bool {
    let k = pattern.n();
    verts.iter().copied().permutations(k).any(|perm| {
        (0..k).all(|i| {
            (i + 1..k).all(|j| pattern.has_edge(i, j) == g.has_edge(perm[i], perm[j]))
        })
    })
}

/// Oracle occurrence search: every k-subset, checked by permutations.
fn brute_force_occurrences(g: &Graph, pattern: &Graph) -> Vec<Vec<usize>> {
    g.vertices()
        .combinations(pattern.n())
        .filter(|s| permutation_isomorphic(g, s, pattern))
        .collect()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_graph(n, p, &mut rng)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn induced_subgraph_restricts_edges(g in arb_graph(9), mask in any::<u16>()) {
        let s: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        let (sub, remap) = g.induced(&s).unwrap();
        // recount: edge in subgraph iff both old endpoints adjacent in g
        let mut expected = 0;
        for i in 0..remap.len() {
            for j in i + 1..remap.len() {
                let adj = g.has_edge(remap[i], remap[j]);
                prop_assert_eq!(sub.has_edge(i, j), adj);
                expected += adj as usize;
            }
        }
        prop_assert_eq!(sub.edge_count(), expected);
    }

    #[test]
    fn find_induced_matches_brute_force(g in arb_graph(8)) {
        for p in [PatternId::K3, PatternId::Paw, PatternId::Claw, PatternId::Diamond,
                  PatternId::Cricket, PatternId::Butterfly] {
            let pattern = p.graph().unwrap();
            if pattern.n() > g.n() {
                continue;
            }
            let got = find_induced(&g, &pattern);
            let want = brute_force_occurrences(&g, &pattern);
            prop_assert_eq!(got, want, "pattern {}", p);
        }
    }

    #[test]
    fn nsf_agrees_with_triangle_listing(g in arb_graph(9)) {
        let tris = enumerate_triangles(&g);
        let every_deg2_in_triangle = g
            .vertices()
            .filter(|&v| g.degree(v) >= 2)
            .all(|v| tris.iter().any(|t| t.contains(&v)));
        prop_assert_eq!(is_nsf(&g), every_deg2_in_triangle);
    }

    #[test]
    fn triangle_listing_is_sorted_and_exact(g in arb_graph(9)) {
        let tris = enumerate_triangles(&g);
        let brute: Vec<[usize; 3]> = g.vertices().combinations(3)
            .filter(|t| g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]))
            .map(|t| [t[0], t[1], t[2]])
            .collect();
        prop_assert_eq!(&tris, &brute);
        let mut sorted = tris.clone();
        sorted.sort();
        prop_assert_eq!(tris, sorted);
    }
}

#[test]
fn chordless_cycles_against_direct_check() {
    // oracle: a vertex subset is a chordless cycle iff it induces a
    // connected 2-regular graph
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..30 {
        let g = random_graph(9, 0.3, &mut rng);
        let mut want: Vec<usize> = Vec::new();
        for k in 4..=9 {
            for s in g.vertices().combinations(k) {
                let (sub, _) = g.induced(&s).unwrap();
                if sub.is_connected() && sub.vertices().all(|v| sub.degree(v) == 2) {
                    want.push(k);
                }
            }
        }
        want.sort_unstable();
        assert_eq!(graph_core::induced_cycles_up_to(&g, 9), want);
    }
}

#[test]
fn w4_contains_four_diamonds_and_no_k4() {
    let w4 = PatternId::W4.graph().unwrap();
    assert_eq!(
        brute_force_occurrences(&w4, &PatternId::Diamond.graph().unwrap()).len(),
        4
    );
    assert!(brute_force_occurrences(&w4, &PatternId::K4.graph().unwrap()).is_empty());
}
