use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{graph_aut, Permutation};
use crate::error::Result;
use crate::graph::build_graph;
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingOp {
    Add,
    Mul,
}

/// A part-preserving graph automorphism outside the image of the ring
/// automorphisms, with ring elements `a`, `b` on which it breaks `op`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonImageWitness {
    pub permutation: Permutation,
    pub a: usize,
    pub b: usize,
    pub op: RingOp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiReport {
    pub ring_aut_order: u64,
    /// Order of the part-preserving automorphism group of B(R).
    #[serde(with = "super::decimal")]
    pub graph_aut_order: BigUint,
    /// Every induced permutation maps edges to edges and non-edges to non-edges.
    pub condition_holds: bool,
    pub injective: bool,
    pub surjective: bool,
    pub iso: bool,
    pub non_image_witness: Option<NonImageWitness>,
}

/// Compares the ring automorphisms, acting on Z(R)* and U(R), with the
/// part-preserving automorphisms of B(R).
pub fn phi_analysis(ring: &Ring, brute_force_cap: u64) -> Result<PhiReport> {
    let auts = ring.aut_group(brute_force_cap)?;
    let g = build_graph(ring);
    let report = graph_aut(&g.graph)?;
    let n = g.graph.vertex_count();
    let l = g.graph.left_count();
    let vertex_of = |x: usize| {
        g.left_position(x)
            .or_else(|| g.right_position(x).map(|r| l + r))
    };

    let mut condition_holds = true;
    let mut images: HashSet<Vec<usize>> = HashSet::new();
    let elements = auts.elements(ring.order());
    for sigma in &elements {
        let perm: Vec<usize> = (0..n)
            .map(|v| vertex_of(sigma[g.ring_index(v)]).expect("automorphisms fix 0"))
            .collect();
        for &z in &g.left_index {
            for &u in &g.right_index {
                let before = !ring.is_unit(ring.add(z, u));
                let after = !ring.is_unit(ring.add(sigma[z], sigma[u]));
                condition_holds &= before == after;
            }
        }
        images.insert(perm);
    }
    let injective = images.len() == elements.len();
    let surjective = BigUint::from(images.len()) == report.part_preserving_order;

    let non_image_witness = if surjective {
        None
    } else {
        report
            .part_preserving_generators
            .iter()
            .find(|p| !images.contains(&p.to_map(n)))
            .map(|p| {
                let vmap = p.to_map(n);
                let f = |x: usize| if x == 0 { 0 } else { g.ring_index(vmap[vertex_of(x).unwrap()]) };
                breaking_pair(ring, f)
                    .map(|(a, b, op)| NonImageWitness {
                        permutation: p.clone(),
                        a,
                        b,
                        op,
                    })
                    .expect("a bijection outside the ring automorphisms breaks + or x")
            })
    };
    Ok(PhiReport {
        ring_aut_order: auts.order,
        graph_aut_order: report.part_preserving_order,
        condition_holds,
        injective,
        surjective,
        iso: injective && surjective,
        non_image_witness,
    })
}

/// First pair on which `f` fails to be additive, else multiplicative.
pub(crate) fn breaking_pair(ring: &Ring, f: impl Fn(usize) -> usize) -> Option<(usize, usize, RingOp)> {
    let n = ring.order();
    for a in 0..n {
        for b in a..n {
            if f(ring.add(a, b)) != ring.add(f(a), f(b)) {
                return Some((a, b, RingOp::Add));
            }
        }
    }
    for a in 0..n {
        for b in a..n {
            if f(ring.mul(a, b)) != ring.mul(f(a), f(b)) {
                return Some((a, b, RingOp::Mul));
            }
        }
    }
    None
}
