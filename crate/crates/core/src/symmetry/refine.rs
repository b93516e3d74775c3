//! Ordered partitions and equitable refinement.

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

pub(crate) fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Cells are identified by their first position.
#[derive(Debug, Clone)]
pub(crate) struct Partition {
    pub order: Vec<usize>,
    pub pos: Vec<usize>,
    cell_of: Vec<usize>,
    cell_end: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Cells of equal colour, in increasing colour order. Returns all cell starts.
    pub fn from_colours(colours: &[u64]) -> (Self, Vec<usize>) {
        let n = colours.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (colours[v], v));
        let mut p = Partition {
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_end: vec![0; n],
            cells: 0,
            order,
        };
        let mut starts = Vec::new();
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && colours[p.order[e]] == colours[p.order[s]] {
                e += 1;
            }
            p.make_cell(s, e);
            starts.push(s);
            s = e;
        }
        for (i, &v) in p.order.iter().enumerate() {
            p.pos[v] = i;
        }
        (p, starts)
    }

    fn make_cell(&mut self, s: usize, e: usize) {
        self.cell_end[s] = e;
        for i in s..e {
            self.cell_of[self.order[i]] = s;
        }
        self.cells += 1;
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.order.len()
    }

    pub fn cell(&self, s: usize) -> &[usize] {
        &self.order[s..self.cell_end[s]]
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.order.len() {
            let size = self.cell_end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
            }
            s = self.cell_end[s];
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell and returns the singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let e = self.cell_end[s];
        let u = self.order[s];
        let pv = self.pos[v];
        self.order.swap(s, pv);
        self.pos[u] = pv;
        self.pos[v] = s;
        self.cell_end[s] = s + 1;
        self.cells -= 1;
        self.make_cell(s + 1, e);
        self.cell_of[v] = s;
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// folding an isomorphism-invariant record of the splits into `h`.
    pub fn refine(&mut self, g: &SimpleGraph, splitters: &[usize], mut h: u64) -> u64 {
        let n = self.order.len();
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            in_queue[s] = true;
            queue.push_back(s);
        }
        let mut count = vec![0u32; n];
        let mut touched = Vec::new();
        while let Some(s) = queue.pop_front() {
            in_queue[s] = false;
            if self.is_discrete() {
                break;
            }
            for i in s..self.cell_end[s] {
                for &w in g.neighbors(self.order[i]) {
                    if count[w] == 0 {
                        touched.push(w);
                    }
                    count[w] += 1;
                }
            }
            let mut cells: Vec<usize> = touched.iter().map(|&w| self.cell_of[w]).collect();
            cells.sort_unstable();
            cells.dedup();
            for c in cells {
                let e = self.cell_end[c];
                if e - c == 1 {
                    continue;
                }
                let mut verts = self.order[c..e].to_vec();
                verts.sort_by_key(|&v| count[v]);
                if count[verts[0]] == count[verts[verts.len() - 1]] {
                    continue;
                }
                h = mix(h, ((s as u64) << 32) | c as u64);
                self.order[c..e].copy_from_slice(&verts);
                let mut frags = vec![c];
                for i in c..e {
                    self.pos[self.order[i]] = i;
                    if i > c && count[self.order[i]] != count[self.order[i - 1]] {
                        frags.push(i);
                    }
                }
                self.cells -= 1;
                for (k, &fs) in frags.iter().enumerate() {
                    let fe = frags.get(k + 1).copied().unwrap_or(e);
                    self.make_cell(fs, fe);
                    h = mix(h, ((count[self.order[fs]] as u64) << 32) | (fe - fs) as u64);
                }
                let largest = frags
                    .iter()
                    .enumerate()
                    .max_by_key(|&(k, &fs)| (frags.get(k + 1).copied().unwrap_or(e) - fs, std::cmp::Reverse(fs)))
                    .map(|(_, &fs)| fs)
                    .unwrap();
                let was_queued = in_queue[c];
                for &fs in &frags {
                    if !in_queue[fs] && (was_queued || fs != largest) {
                        in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            for &w in &touched {
                count[w] = 0;
            }
            touched.clear();
        }
        mix(h, self.cells as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_equitable(p: &Partition, g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        (0..n).all(|u| {
            (0..n).all(|v| {
                p.cell_of[u] != p.cell_of[v]
                    || (0..n).filter(|&s| p.cell_of[s] == s && p.cell_end[s] > s).all(|s| {
                        let cnt = |x: usize| g.neighbors(x).iter().filter(|&&w| p.cell_of[w] == s).count();
                        cnt(u) == cnt(v)
                    })
            })
        })
    }

    #[test]
    fn path_refines_by_distance_from_ends() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]);
        let (mut p, starts) = Partition::from_colours(&[0; 5]);
        p.refine(&g, &starts, 0);
        assert!(is_equitable(&p, &g));
        assert_eq!(p.cells, 3);
        assert_eq!(p.cell_of[0], p.cell_of[4]);
        assert_eq!(p.cell_of[1], p.cell_of[3]);
        let s = p.individualize(0);
        p.refine(&g, &[s], 0);
        assert!(p.is_discrete());
    }

    #[test]
    fn refinement_trace_is_label_invariant() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]);
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.relabel(&perm);
        let (mut p, s1) = Partition::from_colours(&[0; 6]);
        let (mut q, s2) = Partition::from_colours(&[0; 6]);
        assert_eq!(p.refine(&g, &s1, 1), q.refine(&h, &s2, 1));
        assert!(is_equitable(&p, &g) && is_equitable(&q, &h));
        for v in 0..6 {
            assert_eq!(p.cell_of[v], q.cell_of[perm[v]]);
        }
    }
}
