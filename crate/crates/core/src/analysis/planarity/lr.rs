//! Left-right planarity test with embedding (Brandes' formulation).

use std::collections::HashMap;

use crate::graph::SimpleGraph;

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

#[derive(Default)]
struct Rotation {
    // neighbour -> (cw, ccw)
    succ: HashMap<usize, (usize, usize)>,
    leftmost: Option<usize>,
}

impl Rotation {
    fn add(&mut self, end: usize, cw: Option<usize>, ccw: Option<usize>) {
        if self.succ.is_empty() {
            self.succ.insert(end, (end, end));
            self.leftmost = Some(end);
            return;
        }
        if let Some(c) = cw {
            let ref_ccw = self.succ[&c].1;
            self.succ.insert(end, (c, ref_ccw));
            self.succ.get_mut(&ref_ccw).unwrap().0 = end;
            self.succ.get_mut(&c).unwrap().1 = end;
            if self.leftmost == Some(c) {
                self.leftmost = Some(end);
            }
        } else {
            let c = ccw.expect("reference neighbour required");
            let ref_cw = self.succ[&c].0;
            self.succ.insert(end, (ref_cw, c));
            self.succ.get_mut(&ref_cw).unwrap().1 = end;
            self.succ.get_mut(&c).unwrap().0 = end;
        }
    }

    fn add_first(&mut self, end: usize) {
        let lm = self.leftmost;
        self.add(end, lm, None);
    }

    fn clockwise(&self) -> Vec<usize> {
        let Some(start) = self.leftmost else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut cur = self.succ[&start].0;
        while cur != start {
            out.push(cur);
            cur = self.succ[&cur].0;
        }
        out
    }
}

struct Lr<'a> {
    g: &'a SimpleGraph,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    roots: Vec<usize>,
    oriented: HashMap<(usize, usize), usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    ordered: Vec<Vec<usize>>,
}

/// Clockwise rotation system of a planar embedding, or `None` if `g` is not planar.
pub(crate) fn lr_embedding(g: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut lr = Lr {
        g,
        height: vec![NIL; n],
        parent_edge: vec![NIL; n],
        roots: Vec::new(),
        oriented: HashMap::with_capacity(2 * m),
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        out: vec![Vec::new(); n],
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting: Vec::with_capacity(m),
        refs: vec![None; m],
        side: vec![1; m],
        lowpt_edge: vec![NIL; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
        ordered: Vec::new(),
    };
    for v in 0..n {
        if g.degree(v) == 0 {
            lr.height[v] = 0;
        } else if lr.height[v] == NIL {
            lr.height[v] = 0;
            lr.roots.push(v);
            lr.orient(v);
        }
    }
    lr.ordered = lr.sorted_out();
    for i in 0..lr.roots.len() {
        if !lr.test(lr.roots[i]) {
            return None;
        }
    }
    for e in 0..m {
        let s = lr.sign(e);
        lr.nesting[e] *= s;
    }
    lr.ordered = lr.sorted_out();
    let mut rot: Vec<Rotation> = (0..n).map(|_| Rotation::default()).collect();
    for v in 0..n {
        let mut prev = None;
        for &e in &lr.ordered[v] {
            let w = lr.dst[e];
            rot[v].add(w, None, prev);
            prev = Some(w);
        }
    }
    for i in 0..lr.roots.len() {
        lr.embed(lr.roots[i], &mut rot);
    }
    Some(rot.iter().map(Rotation::clockwise).collect())
}

impl Lr<'_> {
    fn sorted_out(&self) -> Vec<Vec<usize>> {
        self.out
            .iter()
            .map(|es| {
                let mut es = es.clone();
                es.sort_by_key(|&e| self.nesting[e]);
                es
            })
            .collect()
    }

    fn new_edge(&mut self, v: usize, w: usize) -> usize {
        let e = self.src.len();
        self.src.push(v);
        self.dst.push(w);
        self.oriented.insert((v, w), e);
        self.out[v].push(e);
        self.lowpt.push(self.height[v]);
        self.lowpt2.push(self.height[v]);
        self.nesting.push(0);
        e
    }

    fn orient(&mut self, root: usize) {
        let g = self.g;
        let mut ind = vec![0usize; g.vertex_count()];
        let mut resume: HashMap<usize, usize> = HashMap::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            while ind[v] < g.degree(v) {
                let w = g.neighbors(v)[ind[v]];
                let vw = match resume.remove(&v) {
                    Some(vw) => vw,
                    None => {
                        if self.oriented.contains_key(&(v, w)) || self.oriented.contains_key(&(w, v)) {
                            ind[v] += 1;
                            continue;
                        }
                        let vw = self.new_edge(v, w);
                        if self.height[w] == NIL {
                            self.parent_edge[w] = vw;
                            self.height[w] = self.height[v] + 1;
                            resume.insert(v, vw);
                            stack.push(v);
                            stack.push(w);
                            break;
                        }
                        self.lowpt[vw] = self.height[w];
                        vw
                    }
                };
                self.nesting[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting[vw] += 1;
                }
                if e != NIL {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let n = self.g.vertex_count();
        let mut ind = vec![0usize; n];
        let mut resumed = vec![false; self.src.len()];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while ind[v] < self.ordered[v].len() {
                let ei = self.ordered[v][ind[v]];
                let w = self.dst[ei];
                if !resumed[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if ei == self.parent_edge[w] {
                        resumed[ei] = true;
                        stack.push(v);
                        stack.push(w);
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval::single(ei),
                    });
                }
                if self.lowpt[ei] < self.height[v] {
                    if ei == self.ordered[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !descended && e != NIL {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && i.high.is_some_and(|h| self.lowpt[h] > self.lowpt[b])
    }

    fn top_conflicts(&self, ei: usize) -> bool {
        self.stack
            .last()
            .is_some_and(|p| self.conflicting(&p.left, ei) || self.conflicting(&p.right, ei))
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.refs[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() <= self.stack_bottom[ei] {
                break;
            }
        }
        while self.top_conflicts(ei) {
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.refs[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.refs[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let lp = |i: &Interval| self.lowpt[i.low.expect("non-empty interval")];
        if p.left.is_empty() {
            return lp(&p.right);
        }
        if p.right.is_empty() {
            return lp(&p.left);
        }
        lp(&p.left).min(lp(&p.right))
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(p) = self.stack.last() {
            if self.lowest(p) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high.filter(|&h| self.dst[h] == u) {
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high.filter(|&h| self.dst[h] == u) {
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edges remain on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.refs[*chain.last().unwrap()] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.refs[a] = None;
        }
        self.side[e]
    }

    fn embed(&mut self, root: usize, rot: &mut [Rotation]) {
        let n = self.g.vertex_count();
        let mut ind = vec![0usize; n];
        let mut left_ref = vec![NIL; n];
        let mut right_ref = vec![NIL; n];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            while ind[v] < self.ordered[v].len() {
                let ei = self.ordered[v][ind[v]];
                ind[v] += 1;
                let w = self.dst[ei];
                if ei == self.parent_edge[w] {
                    rot[w].add_first(v);
                    left_ref[v] = w;
                    right_ref[v] = w;
                    stack.push(v);
                    stack.push(w);
                    break;
                }
                if self.side[ei] == 1 {
                    rot[w].add(v, None, Some(right_ref[w]));
                } else {
                    rot[w].add(v, Some(left_ref[w]), None);
                    left_ref[w] = v;
                }
            }
        }
    }
}
