//! Canonical forms, isomorphism, automorphism groups and the ring-to-graph map.

pub(crate) mod decimal;
mod perm;
mod phi;
mod refine;
mod search;
mod twins;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Bipartite, SimpleGraph};

pub use perm::Permutation;
pub use phi::{phi_analysis, NonImageWitness, PhiReport, RingOp};
pub use twins::{twin_partition, TwinPartition};

/// Largest vertex count accepted by the search routines.
pub const VERTEX_CAP: usize = 4096;

fn check_cap(n: usize) -> Result<()> {
    if n > VERTEX_CAP {
        return Err(Error::Cap {
            what: "graph vertices",
            size: n,
            cap: VERTEX_CAP,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
    /// New label of every vertex; relabeling the graph reproduces `bytes`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(&self.bytes))
    }
}

pub(crate) fn encode(g: &SimpleGraph) -> Vec<u8> {
    let mut out = b"BZCF".to_vec();
    out.extend((g.vertex_count() as u32).to_le_bytes());
    out.extend((g.edge_count() as u32).to_le_bytes());
    for (u, v) in g.edges() {
        out.extend((u as u32).to_le_bytes());
        out.extend((v as u32).to_le_bytes());
    }
    out
}

/// Canonical labeling of a graph whose twin classes are coloured by `colour`.
/// Returns the new label of every vertex and the quotient search.
fn reduced_search(
    g: &SimpleGraph,
    tp: &TwinPartition,
    colour: impl Fn(&[usize]) -> u64,
) -> (Vec<usize>, search::SearchResult) {
    let q = twins::quotient(g, tp);
    let colours: Vec<u64> = tp.classes.iter().map(|c| colour(c)).collect();
    let res = search::search(&q, &colours);
    let mut by_pos = vec![0; tp.classes.len()];
    for (i, &p) in res.labeling.iter().enumerate() {
        by_pos[p] = i;
    }
    let mut relabeling = vec![0; g.vertex_count()];
    let mut next = 0;
    for &ci in &by_pos {
        for &v in &tp.classes[ci] {
            relabeling[v] = next;
            next += 1;
        }
    }
    (relabeling, res)
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    check_cap(g.vertex_count())?;
    let tp = twin_partition(g);
    let (relabeling, _) = reduced_search(g, &tp, |c| c.len() as u64);
    Ok(CanonicalForm {
        bytes: encode(&g.relabel(&relabeling)),
        relabeling,
    })
}

/// A vertex bijection `g1 -> g2` preserving edges, if one exists.
pub fn graphs_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let c1 = canonical_form(g1)?;
    let c2 = canonical_form(g2)?;
    if c1.bytes != c2.bytes {
        return Ok(None);
    }
    let mut inv2 = vec![0; g2.vertex_count()];
    for (v, &p) in c2.relabeling.iter().enumerate() {
        inv2[p] = v;
    }
    let map: Vec<usize> = c1.relabeling.iter().map(|&p| inv2[p]).collect();
    let exact = g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v]));
    assert!(exact, "equal canonical forms must yield an isomorphism");
    Ok(Some(map))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphAutReport {
    #[serde(with = "decimal")]
    pub full_order: BigUint,
    #[serde(with = "decimal")]
    pub part_preserving_order: BigUint,
    pub generators: Vec<Permutation>,
    pub part_preserving_generators: Vec<Permutation>,
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// `prod |class|!` times the order of the coloured quotient, with generators
/// lifted from the quotient plus a transposition and a cycle per twin class.
fn aut_of(g: &SimpleGraph, tp: &TwinPartition, colour: impl Fn(&[usize]) -> u64) -> (BigUint, Vec<Permutation>) {
    let (_, res) = reduced_search(g, tp, colour);
    let mut order = res.order.clone();
    let mut gens = Vec::new();
    for c in &tp.classes {
        order *= factorial(c.len());
        if c.len() >= 2 {
            gens.push(Permutation {
                cycles: vec![vec![c[0], c[1]]],
            });
        }
        if c.len() >= 3 {
            gens.push(Permutation {
                cycles: vec![c.clone()],
            });
        }
    }
    for qg in &res.generators {
        let mut map: Vec<usize> = (0..g.vertex_count()).collect();
        for (i, c) in tp.classes.iter().enumerate() {
            let image = &tp.classes[qg[i]];
            for (k, &v) in c.iter().enumerate() {
                map[v] = image[k];
            }
        }
        gens.push(Permutation::from_map(&map));
    }
    (order, gens)
}

pub fn graph_aut(b: &Bipartite) -> Result<GraphAutReport> {
    let g = b.to_simple();
    check_cap(g.vertex_count())?;
    let parts: Vec<u8> = (0..g.vertex_count()).map(|v| u8::from(v >= b.left_count())).collect();
    let tp = twin_partition(&g);
    let (full_order, generators) = aut_of(&g, &tp, |c| c.len() as u64);
    let tp_parts = twins::twin_classes(&g, Some(&parts));
    let (part_preserving_order, part_preserving_generators) =
        aut_of(&g, &tp_parts, |c| ((parts[c[0]] as u64) << 32) | c.len() as u64);
    let report = GraphAutReport {
        full_order,
        part_preserving_order,
        generators,
        part_preserving_generators,
    };
    debug_assert!(report.verify(b));
    Ok(report)
}

impl GraphAutReport {
    /// Every generator is an automorphism; part-preserving ones fix both parts.
    pub fn verify(&self, b: &Bipartite) -> bool {
        let g = b.to_simple();
        let n = g.vertex_count();
        let l = b.left_count();
        self.generators.iter().all(|p| g.is_automorphism(&p.to_map(n)))
            && self.part_preserving_generators.iter().all(|p| {
                let m = p.to_map(n);
                g.is_automorphism(&m) && (0..n).all(|v| (v < l) == (m[v] < l))
            })
            && (&self.full_order % &self.part_preserving_order) == BigUint::from(0u32)
    }
}

#[cfg(test)]
mod tests;
