//! Connectivity, distances, cycles, K_{3,3} subgraphs and planarity.

mod k33;
mod planarity;

use serde::{Deserialize, Serialize};

use crate::graph::{Bipartite, SimpleGraph};

pub use k33::{find_k33, K33Witness};
pub use planarity::{
    planarity, planarity_bipartite, verify_certificate, verify_embedding, verify_kuratowski,
    KuratowskiKind, KuratowskiSubdivision, PlanarityCertificate, PlanarityResult, PlanarityVerdict,
};
pub(crate) use planarity::classify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    /// Disconnected with at least two vertices.
    Infinite,
    /// At most one vertex.
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub component_count: usize,
    pub is_connected: bool,
    pub diameter: Diameter,
    pub girth: Girth,
    /// A shortest cycle in the combined numbering, least among those found by BFS.
    pub girth_cycle: Option<Vec<usize>>,
    pub chromatic: u8,
    pub clique: u8,
    pub is_complete_bipartite: bool,
    pub is_forest: bool,
    pub degree_multiset_left: Vec<usize>,
    pub degree_multiset_right: Vec<usize>,
}

pub fn analyze(b: &Bipartite) -> GraphStats {
    let g = b.to_simple();
    let (component_count, _) = g.components();
    let (girth, girth_cycle) = match shortest_cycle(&g) {
        Some(c) => (Girth::Finite(c.len()), Some(c)),
        None => (Girth::Acyclic, None),
    };
    let mut left = b.left_degrees();
    let mut right = b.right_degrees();
    left.sort_unstable();
    right.sort_unstable();
    GraphStats {
        component_count,
        is_connected: component_count <= 1,
        diameter: diameter(&g),
        girth,
        is_forest: girth_cycle.is_none(),
        girth_cycle,
        chromatic: chromatic_number(&g),
        clique: clique_number(&g),
        is_complete_bipartite: b.is_complete_bipartite(),
        degree_multiset_left: left,
        degree_multiset_right: right,
    }
}

pub fn diameter(g: &SimpleGraph) -> Diameter {
    let n = g.vertex_count();
    if n <= 1 {
        return Diameter::Degenerate;
    }
    let mut best = 0;
    for s in 0..n {
        for d in g.bfs(s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(best)
}

/// Proper colouring by BFS layers, or `None` when an odd cycle exists.
pub fn two_colouring(g: &SimpleGraph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        for (v, d) in g.bfs(s).into_iter().enumerate() {
            if let Some(d) = d {
                colour[v] = (d % 2) as u8;
            }
        }
    }
    g.edges()
        .iter()
        .all(|&(u, v)| colour[u] != colour[v])
        .then_some(colour)
}

fn chromatic_number(g: &SimpleGraph) -> u8 {
    match (g.vertex_count(), g.edge_count()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ if two_colouring(g).is_some() => 2,
        _ => 3,
    }
}

fn clique_number(g: &SimpleGraph) -> u8 {
    if g.vertex_count() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let triangle = g.edges().iter().any(|&(u, v)| {
        g.neighbors(u).iter().any(|&w| w != v && g.has_edge(v, w))
    });
    if triangle {
        3
    } else {
        2
    }
}

/// Rotate so the least vertex comes first, then pick the smaller direction.
fn normalize_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(pos);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// A shortest cycle, found by BFS from every vertex.
pub fn shortest_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        let limit = best.as_ref().map_or(usize::MAX, Vec::len);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 > limit {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if w != parent[v] && parent[w] != v && dist[w] >= dist[v] {
                    let len = dist[v] + dist[w] + 1;
                    if best.as_ref().is_some_and(|b| len > b.len()) {
                        continue;
                    }
                    let Some(cycle) = close_cycle(&parent, s, v, w) else {
                        continue;
                    };
                    let cycle = normalize_cycle(cycle);
                    if best
                        .as_ref()
                        .is_none_or(|b| (cycle.len(), &cycle) < (b.len(), b))
                    {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// Joins the tree paths `s..v` and `s..w` through edge `vw` if they meet only at `s`.
fn close_cycle(parent: &[usize], s: usize, v: usize, w: usize) -> Option<Vec<usize>> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while x != s {
            x = parent[x];
            p.push(x);
        }
        p.reverse();
        p
    };
    let pv = path(v);
    let pw = path(w);
    if pv[1..].iter().any(|x| pw[1..].contains(x)) {
        return None;
    }
    let mut cycle = pv;
    cycle.extend(pw[1..].iter().rev());
    Some(cycle)
}

/// Checks that `cycle` is a simple cycle of `g` with at least three vertices.
pub fn is_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut seen = std::collections::HashSet::new();
    k >= 3
        && cycle.iter().all(|&v| v < g.vertex_count() && seen.insert(v))
        && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::Ring;

    fn stats(s: &str) -> GraphStats {
        analyze(&build_graph(&Ring::parse(s).unwrap()).graph)
    }

    #[test]
    fn z6_is_a_path() {
        let st = stats("Z/6");
        assert_eq!(st.diameter, Diameter::Finite(4));
        assert_eq!(st.girth, Girth::Acyclic);
        assert!(st.is_forest && st.is_connected);
        assert_eq!((st.chromatic, st.clique), (2, 2));
        assert_eq!(st.degree_multiset_left, vec![1, 1, 2]);
        assert_eq!(st.degree_multiset_right, vec![2, 2]);
    }

    #[test]
    fn small_products() {
        let st = stats("GF(2) x GF(2)");
        assert_eq!((st.diameter, st.girth), (Diameter::Finite(2), Girth::Acyclic));
        assert_eq!(stats("GF(4) x GF(4)").girth, Girth::Finite(8));
        assert_eq!(stats("GF(2) x GF(2) x GF(3)").girth, Girth::Finite(4));
    }

    #[test]
    fn degenerate_and_disconnected() {
        let st = stats("GF(2)");
        assert_eq!(st.diameter, Diameter::Degenerate);
        assert_eq!((st.chromatic, st.clique), (1, 1));
        let st = stats("GF(5)");
        assert_eq!(st.diameter, Diameter::Infinite);
        assert_eq!(st.component_count, 4);
        assert!(!st.is_complete_bipartite);
    }

    #[test]
    fn girth_witness_is_a_cycle() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]);
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c, vec![0, 1, 4, 5]);
        assert!(is_cycle(&g, &c));
        let tri = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]);
        assert_eq!(shortest_cycle(&tri).unwrap(), vec![0, 1, 2]);
        assert_eq!(chromatic_number(&tri), 3);
        assert_eq!(clique_number(&tri), 3);
    }
}
