//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use bzu_core::graph::{Bipartite, SimpleGraph};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, e)
}

/// Random bipartite graph in the combined numbering, left part first.
pub fn random_bipartite(rng: &mut ChaCha8Rng, l: usize, r: usize, p: f64) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for a in 0..l {
        for b in 0..r {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    e
}

pub fn adjacency_matrix(g: &SimpleGraph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let mut a = vec![vec![0u64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    a
}

fn bool_product(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut c = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    if b[k][j] != 0 {
                        c[i][j] = 1;
                    }
                }
            }
        }
    }
    c
}

/// All-pairs distances from powers of `I + A`.
pub fn matrix_distances(g: &SimpleGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let a = adjacency_matrix(g);
    let mut reach: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut step = a.clone();
    for i in 0..n {
        step[i][i] = 1;
    }
    let mut dist: Vec<Vec<Option<usize>>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j).then_some(0)).collect())
        .collect();
    for k in 1..n.max(1) {
        reach = bool_product(&reach, &step);
        for i in 0..n {
            for j in 0..n {
                if reach[i][j] != 0 && dist[i][j].is_none() {
                    dist[i][j] = Some(k);
                }
            }
        }
    }
    dist
}

/// `(connected, diameter)` with `None` for disconnected or at most one vertex.
pub fn oracle_diameter(g: &SimpleGraph) -> (bool, Option<usize>) {
    let n = g.vertex_count();
    let d = matrix_distances(g);
    let connected = d.iter().all(|row| row.iter().all(Option::is_some));
    let diam = if n <= 1 || !connected {
        None
    } else {
        d.iter().flatten().map(|x| x.unwrap()).max()
    };
    (connected, diam)
}

/// Girth as the least `1 + dist_{G - uv}(u, v)` over edges `uv`.
pub fn oracle_girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut best: Option<usize> = None;
    for &(u, v) in &edges {
        let h = SimpleGraph::from_edges(n, edges.iter().copied().filter(|&e| e != (u, v)));
        if let Some(d) = matrix_distances(&h)[u][v] {
            best = Some(best.map_or(d + 1, |b: usize| b.min(d + 1)));
        }
    }
    best
}

pub fn component_count(g: &SimpleGraph) -> usize {
    let d = matrix_distances(g);
    let mut seen = vec![false; g.vertex_count()];
    let mut count = 0;
    for i in 0..g.vertex_count() {
        if !seen[i] {
            count += 1;
            for j in 0..g.vertex_count() {
                if d[i][j].is_some() {
                    seen[j] = true;
                }
            }
        }
    }
    count
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Tries every pair of triples for a K_{3,3} subgraph.
pub fn has_k33_exhaustive(b: &Bipartite) -> bool {
    let rights = combinations(b.right_count(), 3);
    combinations(b.left_count(), 3).iter().any(|ls| {
        rights
            .iter()
            .any(|rs| ls.iter().all(|&l| rs.iter().all(|&r| b.has_edge(l, r))))
    })
}

/// Does `g` contain internally disjoint paths joining each pair, with
/// interiors avoiding every branch vertex?
fn disjoint_paths(g: &SimpleGraph, pairs: &[(usize, usize)], used: &mut Vec<bool>) -> bool {
    let Some((&(s, t), rest)) = pairs.split_first() else {
        return true;
    };
    if g.has_edge(s, t) && disjoint_paths(g, rest, used) {
        return true;
    }
    // extend simple paths from s through unused vertices
    fn extend(
        g: &SimpleGraph,
        v: usize,
        t: usize,
        rest: &[(usize, usize)],
        used: &mut Vec<bool>,
    ) -> bool {
        for &w in g.neighbors(v) {
            if used[w] {
                continue;
            }
            used[w] = true;
            if (g.has_edge(w, t) && disjoint_paths(g, rest, used)) || extend(g, w, t, rest, used) {
                used[w] = false;
                return true;
            }
            used[w] = false;
        }
        false
    }
    extend(g, s, t, rest, used)
}

/// Exhaustive search for a subdivision of K5 or K_{3,3}.
pub fn has_kuratowski_subdivision(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let deg = |v: usize| g.degree(v);
    for b in combinations(n, 5) {
        if b.iter().any(|&v| deg(v) < 4) {
            continue;
        }
        let mut used = vec![false; n];
        b.iter().for_each(|&v| used[v] = true);
        let pairs: Vec<(usize, usize)> = combinations(5, 2).iter().map(|p| (b[p[0]], b[p[1]])).collect();
        if disjoint_paths(g, &pairs, &mut used) {
            return true;
        }
    }
    for b in combinations(n, 6) {
        if b.iter().any(|&v| deg(v) < 3) {
            continue;
        }
        // sides containing b[0]
        for rest in combinations(5, 2) {
            let side_a: Vec<usize> = std::iter::once(b[0]).chain(rest.iter().map(|&i| b[i + 1])).collect();
            let side_b: Vec<usize> = b.iter().copied().filter(|v| !side_a.contains(v)).collect();
            let mut used = vec![false; n];
            b.iter().for_each(|&v| used[v] = true);
            let pairs: Vec<(usize, usize)> = side_a
                .iter()
                .flat_map(|&x| side_b.iter().map(move |&y| (x, y)))
                .collect();
            if disjoint_paths(g, &pairs, &mut used) {
                return true;
            }
        }
    }
    false
}

/// Counts automorphisms by trying every permutation.
pub fn brute_force_aut_count(g: &SimpleGraph, colours: Option<&[usize]>) -> u64 {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut perm, 0, &mut |p| {
        let colour_ok = colours.is_none_or(|c| (0..n).all(|v| c[v] == c[p[v]]));
        if colour_ok && g.is_automorphism(p) {
            count += 1;
        }
    });
    count
}

pub fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
