mod kuratowski;
mod lr;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::k33::{find_k33, K33Witness};
use crate::graph::{Bipartite, SimpleGraph};

pub use kuratowski::{verify_kuratowski, KuratowskiKind, KuratowskiSubdivision};
pub(crate) use kuratowski::classify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarityVerdict {
    Planar,
    NonPlanar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarityCertificate {
    /// Clockwise neighbour order around every vertex.
    Embedding(Vec<Vec<usize>>),
    /// Left and right indices of the bipartite graph.
    K33(K33Witness),
    Kuratowski(KuratowskiSubdivision),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityResult {
    pub verdict: PlanarityVerdict,
    pub certificate: PlanarityCertificate,
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        self.verdict == PlanarityVerdict::Planar
    }
}

fn non_planar(certificate: PlanarityCertificate) -> PlanarityResult {
    PlanarityResult {
        verdict: PlanarityVerdict::NonPlanar,
        certificate,
    }
}

pub fn planarity(g: &SimpleGraph) -> PlanarityResult {
    match lr::lr_embedding(g) {
        Some(rotation) => PlanarityResult {
            verdict: PlanarityVerdict::Planar,
            certificate: PlanarityCertificate::Embedding(rotation),
        },
        None => non_planar(PlanarityCertificate::Kuratowski(
            kuratowski::extract(g).expect("an edge-minimal non-planar graph is a Kuratowski subdivision"),
        )),
    }
}

/// Planarity of a bipartite graph, preferring a K_{3,3} subgraph as certificate.
pub fn planarity_bipartite(b: &Bipartite) -> PlanarityResult {
    let small_part = b.left_count().min(b.right_count()) <= 2;
    if !small_part {
        if let Some(w) = find_k33(b) {
            return non_planar(PlanarityCertificate::K33(w));
        }
    }
    let g = b.to_simple();
    let v = g.vertex_count();
    if v >= 3 && g.edge_count() > 2 * v - 4 {
        let sub = kuratowski::extract(&g).expect("too many edges for a planar bipartite graph");
        return non_planar(PlanarityCertificate::Kuratowski(sub));
    }
    planarity(&g)
}

/// Checks the certificate of `result` against `g`, where `b` is the bipartite
/// graph that `g` was built from (needed only for K_{3,3} witnesses).
pub fn verify_certificate(g: &SimpleGraph, b: Option<&Bipartite>, result: &PlanarityResult) -> bool {
    match (&result.verdict, &result.certificate) {
        (PlanarityVerdict::Planar, PlanarityCertificate::Embedding(rot)) => verify_embedding(g, rot),
        (PlanarityVerdict::NonPlanar, PlanarityCertificate::K33(w)) => b.is_some_and(|b| w.verify(b)),
        (PlanarityVerdict::NonPlanar, PlanarityCertificate::Kuratowski(sub)) => verify_kuratowski(g, sub),
        _ => false,
    }
}

/// Traces faces of the rotation system and checks `v - e + f = 2` on every
/// component (an isolated vertex counts one face).
pub fn verify_embedding(g: &SimpleGraph, rotation: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    if rotation.len() != n {
        return false;
    }
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return false;
        }
        for (i, &w) in rot.iter().enumerate() {
            pos.insert((v, w), i);
        }
    }
    let (count, comp) = g.components();
    let mut verts = vec![0i64; count];
    let mut edges = vec![0i64; count];
    let mut faces = vec![0i64; count];
    for v in 0..n {
        verts[comp[v]] += 1;
        edges[comp[v]] += g.degree(v) as i64;
        if g.degree(v) == 0 {
            faces[comp[v]] = 1;
        }
    }
    let mut used: HashMap<(usize, usize), bool> = pos.keys().map(|&d| (d, false)).collect();
    let darts: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    for start in darts {
        if used[&start] {
            continue;
        }
        let mut d = start;
        loop {
            used.insert(d, true);
            let (u, v) = d;
            let rot = &rotation[v];
            let next = rot[(pos[&(v, u)] + 1) % rot.len()];
            d = (v, next);
            if d == start {
                break;
            }
            if used[&d] {
                return false;
            }
        }
        faces[comp[start.0]] += 1;
    }
    (0..count).all(|c| verts[c] - edges[c] / 2 + faces[c] == 2)
}

#[cfg(test)]
mod tests;
