use fixedbitset::FixedBitSet;

use super::SimpleGraph;

/// Bipartite graph with one bit-vector over the right part per left vertex.
///
/// In the [`SimpleGraph`] view, left vertex `i` is `i` and right vertex `j`
/// is `left_count + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    right: usize,
    adj: Vec<FixedBitSet>,
}

impl Bipartite {
    pub fn new(left: usize, right: usize) -> Self {
        Bipartite {
            right,
            adj: vec![FixedBitSet::with_capacity(right); left],
        }
    }

    pub fn from_edges(left: usize, right: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut b = Bipartite::new(left, right);
        for (l, r) in edges {
            b.add_edge(l, r);
        }
        b
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(r < self.right, "right vertex {r} out of range");
        self.adj[l].insert(r);
    }

    pub fn left_count(&self) -> usize {
        self.adj.len()
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len() + self.right
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adj[l].contains(r)
    }

    pub fn neighbors(&self, l: usize) -> &FixedBitSet {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count_ones(..)).sum()
    }

    /// Edges `(left, right)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(l, s)| s.ones().map(move |r| (l, r)))
            .collect()
    }

    /// Bit-vectors over the left part, one per right vertex.
    pub fn transpose(&self) -> Vec<FixedBitSet> {
        let mut t = vec![FixedBitSet::with_capacity(self.adj.len()); self.right];
        for (l, s) in self.adj.iter().enumerate() {
            for r in s.ones() {
                t[r].insert(l);
            }
        }
        t
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.count_ones(..)).collect()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        self.transpose().iter().map(|s| s.count_ones(..)).collect()
    }

    pub fn to_simple(&self) -> SimpleGraph {
        let l = self.adj.len();
        SimpleGraph::from_edges(
            self.vertex_count(),
            self.edges().into_iter().map(|(a, b)| (a, l + b)),
        )
    }

    /// Complete bipartite with both parts nonempty.
    pub fn is_complete_bipartite(&self) -> bool {
        self.left_count() > 0
            && self.right > 0
            && self.edge_count() == self.left_count() * self.right
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn views_agree() {
        let b = Bipartite::from_edges(2, 3, [(0, 0), (0, 2), (1, 2)]);
        assert_eq!(b.edge_count(), 3);
        assert_eq!(b.left_degrees(), vec![2, 1]);
        assert_eq!(b.right_degrees(), vec![1, 0, 2]);
        let g = b.to_simple();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 4)]);
        assert!(!b.is_complete_bipartite());
        assert!(Bipartite::from_edges(1, 2, [(0, 0), (0, 1)]).is_complete_bipartite());
        assert!(!Bipartite::new(0, 3).is_complete_bipartite());
    }
}
