use super::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges.iter().copied())
}

fn complete(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn complete_bipartite(a: usize, b: usize) -> Bipartite {
    Bipartite::from_edges(a, b, (0..a).flat_map(|l| (0..b).map(move |r| (l, r))))
}

fn petersen() -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    graph(10, &e)
}

fn grid(w: usize, h: usize) -> SimpleGraph {
    let mut e = Vec::new();
    for y in 0..h {
        for x in 0..w {
            let v = y * w + x;
            if x + 1 < w {
                e.push((v, v + 1));
            }
            if y + 1 < h {
                e.push((v, v + w));
                if x + 1 < w {
                    e.push((v, v + w + 1));
                }
            }
        }
    }
    graph(w * h, &e)
}

fn assert_planar(g: &SimpleGraph) {
    let r = planarity(g);
    assert!(r.is_planar());
    assert!(verify_certificate(g, None, &r));
}

fn assert_non_planar(g: &SimpleGraph, kind: KuratowskiKind) {
    let r = planarity(g);
    assert_eq!(r.verdict, PlanarityVerdict::NonPlanar);
    match &r.certificate {
        PlanarityCertificate::Kuratowski(sub) => {
            assert_eq!(sub.kind, kind);
            assert!(verify_kuratowski(g, sub));
        }
        other => panic!("unexpected certificate {other:?}"),
    }
}

#[test]
fn small_complete_graphs() {
    for n in 0..=4 {
        assert_planar(&complete(n));
    }
    assert_non_planar(&complete(5), KuratowskiKind::K5);
    let k6 = complete(6);
    assert_eq!(planarity(&k6).verdict, PlanarityVerdict::NonPlanar);
}

#[test]
fn k33_and_petersen() {
    assert_non_planar(&complete_bipartite(3, 3).to_simple(), KuratowskiKind::K33);
    assert_non_planar(&petersen(), KuratowskiKind::K33);
}

#[test]
fn goldner_harary_is_maximal_planar() {
    let e = [
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (1, 8), (1, 10), (1, 11), (2, 3), (2, 4),
        (2, 6), (2, 7), (2, 9), (2, 10), (2, 11), (3, 4), (4, 5), (4, 6), (4, 7), (5, 7),
        (6, 7), (7, 8), (7, 9), (7, 10), (8, 10), (9, 10), (10, 11),
    ];
    let g = graph(12, &e);
    assert_planar(&g);
    // any extra edge breaks a maximal planar graph
    let mut more = e.to_vec();
    more.push((3, 11));
    assert_eq!(planarity(&graph(12, &more)).verdict, PlanarityVerdict::NonPlanar);
}

#[test]
fn triangulated_grid_and_wheel() {
    assert_planar(&grid(12, 9));
    let n = 20;
    let mut e: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    e.extend((1..n).map(|i| (i, i % (n - 1) + 1)));
    assert_planar(&graph(n, &e));
}

#[test]
fn subdivided_k5() {
    // every K5 edge replaced by a path of length 2
    let mut e = Vec::new();
    let mut next = 5;
    for u in 0..5 {
        for v in u + 1..5 {
            e.push((u, next));
            e.push((next, v));
            next += 1;
        }
    }
    assert_non_planar(&graph(next, &e), KuratowskiKind::K5);
}

#[test]
fn forests_and_isolated_vertices() {
    assert_planar(&SimpleGraph::new(0));
    assert_planar(&SimpleGraph::new(3));
    assert_planar(&graph(6, &[(0, 1), (1, 2), (4, 5)]));
}

#[test]
fn bipartite_prefers_k33_witness() {
    let b = complete_bipartite(3, 4);
    let r = planarity_bipartite(&b);
    assert!(matches!(r.certificate, PlanarityCertificate::K33(_)));
    assert!(verify_certificate(&b.to_simple(), Some(&b), &r));
    let star = complete_bipartite(2, 7);
    let r = planarity_bipartite(&star);
    assert!(r.is_planar());
    assert!(verify_certificate(&star.to_simple(), Some(&star), &r));
}

#[test]
fn embedding_verifier_rejects_bad_rotations() {
    let k4 = complete(4);
    let PlanarityCertificate::Embedding(mut rot) = planarity(&k4).certificate else {
        panic!("K4 is planar");
    };
    assert!(verify_embedding(&k4, &rot));
    // K4 has one planar rotation system up to mirror image; swapping two
    // neighbours at one vertex destroys it
    rot[0].swap(0, 1);
    assert!(!verify_embedding(&k4, &rot));
    rot[0].pop();
    assert!(!verify_embedding(&k4, &rot));
}

#[test]
fn kuratowski_classifier_rejects_non_subdivisions() {
    let c6: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    assert!(kuratowski::classify(&c6).is_none());
    let k4: Vec<(usize, usize)> = complete(4).edges();
    assert!(kuratowski::classify(&k4).is_none());
}
