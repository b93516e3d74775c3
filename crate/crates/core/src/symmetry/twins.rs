use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

/// Vertices grouped by identical open neighbourhoods.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    /// Sorted classes, ordered by least member.
    pub classes: Vec<Vec<usize>>,
}

/// Twin classes; with `parts`, vertices are also separated by part.
pub(crate) fn twin_classes(g: &SimpleGraph, parts: Option<&[u8]>) -> TwinPartition {
    let mut by_key: BTreeMap<(u8, &[usize]), Vec<usize>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let part = parts.map_or(0, |p| p[v]);
        by_key.entry((part, g.neighbors(v))).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_key.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    TwinPartition { classes }
}

pub fn twin_partition(g: &SimpleGraph) -> TwinPartition {
    twin_classes(g, None)
}

/// Graph on the classes; classes are adjacent when their members are.
pub(crate) fn quotient(g: &SimpleGraph, tp: &TwinPartition) -> SimpleGraph {
    let mut class_of = vec![0; g.vertex_count()];
    for (i, c) in tp.classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let edges = tp.classes.iter().enumerate().flat_map(|(i, c)| {
        let class_of = &class_of;
        g.neighbors(c[0]).iter().map(move |&w| (i, class_of[w]))
    });
    SimpleGraph::from_edges(tp.classes.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_classes() {
        let g = SimpleGraph::from_edges(7, (1..7).map(|i| (0, i)));
        let tp = twin_partition(&g);
        assert_eq!(tp.classes, vec![vec![0], vec![1, 2, 3, 4, 5, 6]]);
        let q = quotient(&g, &tp);
        assert_eq!(q.edges(), vec![(0, 1)]);
    }

    #[test]
    fn isolated_vertices_share_a_class_unless_split_by_part() {
        let g = SimpleGraph::new(3);
        assert_eq!(twin_partition(&g).classes, vec![vec![0, 1, 2]]);
        let split = twin_classes(&g, Some(&[0, 1, 1]));
        assert_eq!(split.classes, vec![vec![0], vec![1, 2]]);
    }
}
