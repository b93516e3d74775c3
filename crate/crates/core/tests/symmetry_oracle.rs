mod common;

use bzu_core::graph::{Bipartite, SimpleGraph};
use bzu_core::symmetry::{canonical_form, graph_aut, graphs_isomorphic};
use common::{brute_force_aut_count, random_bipartite, random_graph, rng};
use num_bigint::BigUint;
use rand::seq::SliceRandom;

fn random_perm(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

#[test]
fn orders_match_brute_force_on_small_bipartite_graphs() {
    let mut r = rng(3);
    for i in 0..300 {
        let l = 1 + i % 4;
        let rr = 1 + (i / 4) % 4;
        let p = [0.2, 0.5, 0.8][i % 3];
        let b = Bipartite::from_edges(l, rr, random_bipartite(&mut r, l, rr, p));
        let g = b.to_simple();
        let rep = graph_aut(&b).unwrap();
        assert!(rep.verify(&b));
        let parts: Vec<usize> = (0..g.vertex_count()).map(|v| usize::from(v >= l)).collect();
        assert_eq!(rep.full_order, BigUint::from(brute_force_aut_count(&g, None)), "{:?}", b.edges());
        assert_eq!(
            rep.part_preserving_order,
            BigUint::from(brute_force_aut_count(&g, Some(&parts))),
            "{:?}",
            b.edges()
        );
    }
}

#[test]
fn canonical_form_is_relabeling_invariant() {
    let mut r = rng(5);
    for i in 0..200 {
        let n = 2 + i % 39;
        let g = random_graph(&mut r, n, [0.1, 0.3, 0.5][i % 3]);
        let h = g.relabel(&random_perm(&mut r, n));
        let (a, b) = (canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert_eq!(a.bytes, b.bytes);
        let m = graphs_isomorphic(&g, &h).unwrap().expect("relabeled copies are isomorphic");
        assert!(g.edges().iter().all(|&(u, v)| h.has_edge(m[u], m[v])));
    }
}

#[test]
fn canonical_form_separates_different_degree_sequences() {
    let mut r = rng(9);
    let mut checked = 0;
    while checked < 200 {
        let n = 4 + checked % 30;
        let g = random_graph(&mut r, n, 0.3);
        let h = random_graph(&mut r, n, 0.3);
        let degs = |x: &SimpleGraph| {
            let mut d: Vec<usize> = (0..n).map(|v| x.degree(v)).collect();
            d.sort_unstable();
            d
        };
        if degs(&g) == degs(&h) {
            continue;
        }
        assert_ne!(canonical_form(&g).unwrap().bytes, canonical_form(&h).unwrap().bytes);
        assert!(graphs_isomorphic(&g, &h).unwrap().is_none());
        checked += 1;
    }
}

fn symmetric_families() -> Vec<(SimpleGraph, u64)> {
    let cycle = |n: usize| SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)));
    let cube = |d: usize| {
        let n = 1 << d;
        SimpleGraph::from_edges(n, (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))))
    };
    let rook = |k: usize| {
        let n = k * k;
        SimpleGraph::from_edges(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| u != v && (u / k == v / k || u % k == v % k)).map(move |v| (u, v))),
        )
    };
    let mut two_cycles = Vec::new();
    for base in [0, 6] {
        two_cycles.extend((0..6).map(|i| (base + i, base + (i + 1) % 6)));
    }
    vec![
        (cycle(12), 24),
        (cube(4), 384),
        (rook(3), 72),
        (rook(4), 1152),
        (SimpleGraph::from_edges(12, two_cycles), 288),
    ]
}

#[test]
fn symmetric_families_have_known_orders() {
    let mut r = rng(1);
    for (g, order) in symmetric_families() {
        let n = g.vertex_count();
        let h = g.relabel(&random_perm(&mut r, n));
        assert_eq!(canonical_form(&g).unwrap().bytes, canonical_form(&h).unwrap().bytes);
        let edges: Vec<(usize, usize)> = g.edges();
        // subdividing every edge gives a bipartite graph with the same group
        // when the minimum degree is at least 3
        if (0..n).all(|v| g.degree(v) >= 3) {
            let b = Bipartite::from_edges(n, edges.len(), edges.iter().enumerate().flat_map(|(i, &(u, v))| [(u, i), (v, i)]));
            assert_eq!(graph_aut(&b).unwrap().full_order, BigUint::from(order));
        }
    }
}

#[test]
fn rook_and_shrikhande_are_distinguished() {
    let rook = SimpleGraph::from_edges(
        16,
        (0..16usize).flat_map(|u| (0..16).filter(move |&v| u != v && (u / 4 == v / 4 || u % 4 == v % 4)).map(move |v| (u, v))),
    );
    let diffs = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let shrikhande = SimpleGraph::from_edges(
        16,
        (0..16usize).flat_map(|u| {
            diffs
                .iter()
                .map(move |&(da, db)| (u, ((u / 4 + da) % 4) * 4 + (u % 4 + db) % 4))
        }),
    );
    assert_eq!(rook.edge_count(), shrikhande.edge_count());
    assert_ne!(canonical_form(&rook).unwrap().bytes, canonical_form(&shrikhande).unwrap().bytes);
    let mut r = rng(2);
    let h = shrikhande.relabel(&random_perm(&mut r, 16));
    assert!(graphs_isomorphic(&shrikhande, &h).unwrap().is_some());
    assert!(graphs_isomorphic(&rook, &h).unwrap().is_none());
}
