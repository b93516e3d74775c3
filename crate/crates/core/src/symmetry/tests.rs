use super::*;
use crate::graph::build_graph;
use crate::ring::Ring;

fn ring_graph(s: &str) -> Bipartite {
    build_graph(&Ring::parse(s).unwrap()).graph
}

fn aut(s: &str) -> GraphAutReport {
    let b = ring_graph(s);
    let r = graph_aut(&b).unwrap();
    assert!(r.verify(&b));
    r
}

#[test]
fn star_orders() {
    assert_eq!(aut("GF(2) x GF(2) x GF(2)").full_order, factorial(6));
    assert_eq!(aut("GF(2) x GF(2) x GF(2) x GF(2)").full_order, factorial(14));
    assert_eq!(aut("GF(2) x GF(2)").full_order, BigUint::from(2u32));
}

#[test]
fn z6_path_reversal() {
    let r = aut("Z/6");
    assert_eq!(r.full_order, BigUint::from(2u32));
    assert_eq!(r.part_preserving_order, BigUint::from(2u32));
}

#[test]
fn edgeless_graphs_mix_parts() {
    // one zero-divisor and two units, all isolated
    let r = aut("Z/4");
    assert_eq!(r.full_order, BigUint::from(6u32));
    assert_eq!(r.part_preserving_order, BigUint::from(2u32));
    assert_eq!(aut("GF(199)").full_order, factorial(198));
}

#[test]
fn twin_partition_of_z6() {
    let g = ring_graph("Z/6").to_simple();
    // left 2,3,4 then right 1,5: N(2) = {1}, N(4) = {5}
    assert_eq!(twin_partition(&g).classes.len(), 5);
}

#[test]
fn canonical_forms() {
    let cf = |s: &str| canonical_form(&ring_graph(s).to_simple()).unwrap();
    assert_eq!(cf("GF(2)[t]/(t^2)").bytes, cf("Z/4").bytes);
    assert_ne!(cf("GF(2) x GF(4)").bytes, cf("GF(2) x GF(2) x GF(2)").bytes);
    assert_eq!(cf("Z/6").bytes, cf("GF(3) x GF(2)").bytes);
    let c = cf("Z/6");
    assert_eq!(encode(&ring_graph("Z/6").to_simple().relabel(&c.relabeling)), c.bytes);
    assert_eq!(c.digest().len(), 64);
}

#[test]
fn isomorphism_mappings() {
    let g1 = ring_graph("Z/6").to_simple();
    let g2 = ring_graph("GF(2) x GF(3)").to_simple();
    let m = graphs_isomorphic(&g1, &g2).unwrap().unwrap();
    assert!(g1.edges().iter().all(|&(u, v)| g2.has_edge(m[u], m[v])));
    let a = ring_graph("GF(2) x GF(2)").to_simple();
    let b = ring_graph("GF(2) x GF(2) x GF(2)").to_simple();
    assert!(graphs_isomorphic(&a, &b).unwrap().is_none());
}

#[test]
fn phi_examples() {
    let phi = |s: &str| phi_analysis(&Ring::parse(s).unwrap(), 64).unwrap();
    let p = phi("GF(2)");
    assert!(p.injective && p.surjective && p.iso);
    let p = phi("GF(2) x GF(2)");
    assert!(p.iso);
    let p = phi("GF(2) x GF(2) x GF(2)");
    assert!(p.injective && !p.surjective);
    assert!(p.non_image_witness.is_some());
    let p = phi("GF(2) x GF(3)");
    assert_eq!(p.ring_aut_order, 1);
    assert_eq!(p.graph_aut_order, BigUint::from(2u32));
    assert!(!p.iso);
    let w = p.non_image_witness.unwrap();
    assert_eq!(w.permutation.cycles.len(), 2);
}
