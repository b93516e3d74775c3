use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::lr::lr_embedding;
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Edge set of a subdivision of K5 or K_{3,3}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiSubdivision {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

fn is_planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    lr_embedding(&SimpleGraph::from_edges(n, edges.iter().copied())).is_some()
}

/// Deletes edges while the graph stays non-planar, in halving chunks and then
/// one at a time, leaving an edge-minimal non-planar subgraph.
pub(crate) fn extract(g: &SimpleGraph) -> Option<KuratowskiSubdivision> {
    let n = g.vertex_count();
    let mut keep = g.edges();
    if is_planar_edges(n, &keep) {
        return None;
    }
    let mut chunk = (keep.len() / 2).max(1);
    loop {
        let mut i = 0;
        while i < keep.len() {
            let end = (i + chunk).min(keep.len());
            let trial: Vec<(usize, usize)> = keep[..i].iter().chain(&keep[end..]).copied().collect();
            if is_planar_edges(n, &trial) {
                i = end;
            } else {
                keep = trial;
            }
        }
        if chunk == 1 {
            break;
        }
        chunk /= 2;
    }
    classify(&keep)
}

/// Reads off branch vertices and kind; `None` unless `edges` is a subdivision.
pub(crate) fn classify(edges: &[(usize, usize)]) -> Option<KuratowskiSubdivision> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut seen_edges = BTreeSet::new();
    for &(u, v) in edges {
        if u == v || !seen_edges.insert((u.min(v), u.max(v))) {
            return None;
        }
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let branch: Vec<usize> = {
        let mut b: Vec<usize> = adj.iter().filter(|(_, n)| n.len() != 2).map(|(&v, _)| v).collect();
        b.sort_unstable();
        b
    };
    let kind = match (branch.len(), branch.iter().all(|v| adj[v].len() == 4), branch.iter().all(|v| adj[v].len() == 3)) {
        (5, true, _) => KuratowskiKind::K5,
        (6, _, true) => KuratowskiKind::K33,
        _ => return None,
    };
    // walk each branch-to-branch path through degree-2 vertices
    let mut interior_seen = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for &b in &branch {
        for &first in &adj[&b] {
            let (mut prev, mut cur) = (b, first);
            while adj[&cur].len() == 2 {
                interior_seen.insert(cur);
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                (prev, cur) = (cur, next);
            }
            if cur == b {
                return None;
            }
            pairs.insert((b.min(cur), b.max(cur)));
        }
    }
    // every degree-2 vertex lies on some path, so no stray cycles
    if interior_seen.len() + branch.len() != adj.len() {
        return None;
    }
    // each path is seen from both ends; distinct pairs mean no parallel paths
    let path_count = branch.iter().map(|v| adj[v].len()).sum::<usize>() / 2;
    if pairs.len() != path_count {
        return None;
    }
    let ok = match kind {
        KuratowskiKind::K5 => pairs.len() == 10,
        KuratowskiKind::K33 => {
            let a = branch[0];
            let side_b: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|&v| pairs.contains(&(a.min(v), a.max(v))))
                .collect();
            let side_a: Vec<usize> = branch.iter().copied().filter(|v| !side_b.contains(v)).collect();
            pairs.len() == 9
                && side_a.len() == 3
                && side_b.len() == 3
                && side_a
                    .iter()
                    .all(|&x| side_b.iter().all(|&y| pairs.contains(&(x.min(y), x.max(y)))))
        }
    };
    let mut edges: Vec<(usize, usize)> = seen_edges.into_iter().collect();
    edges.sort_unstable();
    ok.then_some(KuratowskiSubdivision {
        kind,
        branch_vertices: branch,
        edges,
    })
}

/// Checks that `sub` is a K5 or K_{3,3} subdivision contained in `g`.
pub fn verify_kuratowski(g: &SimpleGraph, sub: &KuratowskiSubdivision) -> bool {
    let inside = sub
        .edges
        .iter()
        .all(|&(u, v)| u < g.vertex_count() && v < g.vertex_count() && g.has_edge(u, v));
    inside
        && classify(&sub.edges).is_some_and(|c| c.kind == sub.kind && c.branch_vertices == sub.branch_vertices)
}
