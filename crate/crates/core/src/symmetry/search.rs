//! Individualization-refinement search for canonical labelings and
//! automorphism generators of vertex-coloured graphs.

use std::cmp::Ordering;

use num_bigint::BigUint;

use super::perm::orbits;
use super::refine::{mix, Partition};
use crate::graph::SimpleGraph;

pub(crate) struct SearchResult {
    /// Canonical position of every vertex.
    pub labeling: Vec<usize>,
    pub generators: Vec<Vec<usize>>,
    pub order: BigUint,
}

#[derive(Clone)]
struct Leaf {
    trace: Vec<u64>,
    code: Vec<u64>,
    order: Vec<usize>,
    pos: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    colours: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn cmp_prefix(t: &[u64], b: &[u64]) -> Ordering {
    let k = t.len().min(b.len());
    t[..k].cmp(&b[..k])
}

pub(crate) fn search(g: &SimpleGraph, colours: &[u64]) -> SearchResult {
    let n = g.vertex_count();
    let (mut root, starts) = Partition::from_colours(colours);
    let h = root.refine(g, &starts, mix(0, n as u64));
    let mut s = Search {
        g,
        colours,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    s.explore(&root, &mut vec![h], &mut Vec::new());
    let first = s.first.expect("search reaches a leaf");
    let best = s.best.expect("search reaches a leaf");
    let mut order = BigUint::from(1u32);
    for i in 0..first.path.len() {
        let prefix = &first.path[..i];
        let fixing: Vec<Vec<usize>> = s
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&v| g[v] == v))
            .cloned()
            .collect();
        let orb = orbits(n, &fixing);
        let root_v = orb[first.path[i]];
        order *= orb.iter().filter(|&&r| r == root_v).count() as u64;
    }
    SearchResult {
        labeling: best.pos,
        generators: s.generators,
        order,
    }
}

impl Search<'_> {
    fn code(&self, order: &[usize], pos: &[usize]) -> Vec<u64> {
        let mut code: Vec<u64> = order.iter().map(|&v| self.colours[v]).collect();
        let mut edges: Vec<u64> = self
            .g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                ((a as u64) << 32) | b as u64
            })
            .collect();
        edges.sort_unstable();
        code.extend(edges);
        code
    }

    fn explore(&mut self, part: &Partition, trace: &mut Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(part, trace, path);
        }
        let first_ok = self.first.as_ref().is_none_or(|f| f.trace.starts_with(trace));
        let below_best = self
            .best
            .as_ref()
            .is_some_and(|b| cmp_prefix(trace, &b.trace) == Ordering::Less);
        if !first_ok && below_best {
            return None;
        }
        let t = part.target_cell().expect("non-discrete partition has a target cell");
        let cell = part.cell(t).to_vec();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() {
                let fixing: Vec<Vec<usize>> = self
                    .generators
                    .iter()
                    .filter(|g| path.iter().all(|&v| g[v] == v))
                    .cloned()
                    .collect();
                let orb = orbits(self.g.vertex_count(), &fixing);
                if explored.iter().any(|&x| orb[x] == orb[w]) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = part.clone();
            let s = child.individualize(w);
            let h = child.refine(self.g, &[s], mix(*trace.last().unwrap(), ((t as u64) << 32) | cell.len() as u64));
            trace.push(h);
            path.push(w);
            let jump = self.explore(&child, trace, path);
            trace.pop();
            path.pop();
            if let Some(k) = jump {
                if k < depth {
                    return Some(k);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, trace: &[u64], path: &[usize]) -> Option<usize> {
        let leaf = Leaf {
            trace: trace.to_vec(),
            code: self.code(&part.order, &part.pos),
            order: part.order.clone(),
            pos: part.pos.clone(),
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if leaf.trace == first.trace && leaf.code == first.code {
            let gamma: Vec<usize> = (0..leaf.pos.len()).map(|v| leaf.order[first.pos[v]]).collect();
            let k = common_prefix(path, &first.path);
            self.add_generator(gamma);
            return Some(k);
        }
        let best = self.best.as_ref().unwrap();
        match (&leaf.trace, &leaf.code).cmp(&(&best.trace, &best.code)) {
            Ordering::Equal => {
                let gamma: Vec<usize> = (0..leaf.pos.len()).map(|v| leaf.order[best.pos[v]]).collect();
                self.add_generator(gamma);
            }
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Less => {}
        }
        None
    }

    fn add_generator(&mut self, gamma: Vec<usize>) {
        debug_assert!(self.g.is_automorphism(&gamma));
        debug_assert!((0..gamma.len()).all(|v| self.colours[v] == self.colours[gamma[v]]));
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.generators.push(gamma);
        }
    }
}
