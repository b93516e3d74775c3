use serde::{Deserialize, Serialize};

use super::Bipartite;
use crate::error::{Error, Result};
use crate::numtheory::prime_power;
use crate::ring::{Element, Ring};

/// B(R): left part Z(R)*, right part U(R), `z ~ u` iff `z + u` is not a unit.
#[derive(Debug, Clone)]
pub struct BzuGraph {
    pub left_index: Vec<usize>,
    pub right_index: Vec<usize>,
    pub left_labels: Vec<Element>,
    pub right_labels: Vec<Element>,
    pub graph: Bipartite,
}

pub fn build_graph(ring: &Ring) -> BzuGraph {
    let (left_index, right_index) = ring.vertex_sets();
    let mut graph = Bipartite::new(left_index.len(), right_index.len());
    for (l, &z) in left_index.iter().enumerate() {
        for (r, &u) in right_index.iter().enumerate() {
            if !ring.is_unit(ring.add(z, u)) {
                graph.add_edge(l, r);
            }
        }
    }
    BzuGraph {
        left_labels: left_index.iter().map(|&x| ring.element(x)).collect(),
        right_labels: right_index.iter().map(|&x| ring.element(x)).collect(),
        left_index,
        right_index,
        graph,
    }
}

impl BzuGraph {
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Position of ring element `x` in the left part.
    pub fn left_position(&self, x: usize) -> Option<usize> {
        self.left_index.binary_search(&x).ok()
    }

    pub fn right_position(&self, x: usize) -> Option<usize> {
        self.right_index.binary_search(&x).ok()
    }

    /// Ring element of a vertex in the combined numbering (left first).
    pub fn ring_index(&self, v: usize) -> usize {
        let l = self.left_index.len();
        if v < l {
            self.left_index[v]
        } else {
            self.right_index[v - l]
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSizePrediction {
    pub unit_count: u64,
    pub zstar_count: u64,
}

fn check_prime_powers(qs: &[u64]) -> Result<()> {
    match qs.iter().find(|&&q| prime_power(q).is_none()) {
        Some(&q) => Err(Error::NotPrimePower(q)),
        None => Ok(()),
    }
}

/// `|U| = prod (q_i - 1)` and `|Z*| = prod q_i - prod (q_i - 1) - 1`.
pub fn predicted_part_sizes(qs: &[u64]) -> Result<PartSizePrediction> {
    check_prime_powers(qs)?;
    let order: u64 = qs.iter().product();
    let units: u64 = qs.iter().map(|q| q - 1).product();
    Ok(PartSizePrediction {
        unit_count: units,
        zstar_count: order - units - 1,
    })
}

/// Degree of a zero-divisor supported only on coordinate `i`: `prod_{j != i} (q_j - 1)`.
pub fn predicted_single_support_degree(qs: &[u64], i: usize) -> Result<u64> {
    check_prime_powers(qs)?;
    if i >= qs.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: qs.len(),
        });
    }
    Ok(qs
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, q)| q - 1)
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_by_value(s: &str) -> Vec<(usize, usize)> {
        let r = Ring::parse(s).unwrap();
        let g = build_graph(&r);
        g.graph
            .edges()
            .into_iter()
            .map(|(l, u)| (g.left_index[l], g.right_index[u]))
            .collect()
    }

    #[test]
    fn z6_edges() {
        assert_eq!(edges_by_value("Z/6"), vec![(2, 1), (3, 1), (3, 5), (4, 5)]);
    }

    #[test]
    fn f2_squared_is_a_star() {
        let r = Ring::parse("GF(2) x GF(2)").unwrap();
        let g = build_graph(&r);
        assert_eq!(g.graph.edge_count(), 2);
        assert_eq!(g.right_labels, vec![r.element(3)]);
        assert!(g.graph.is_complete_bipartite());
    }

    #[test]
    fn dual_numbers_edgeless() {
        let g = build_graph(&Ring::parse("GF(2)[t]/(t^2)").unwrap());
        assert_eq!(g.edge_count(), 0);
        assert_eq!((g.graph.left_count(), g.graph.right_count()), (1, 2));
    }

    #[test]
    fn predictions() {
        let p = |qs: &[u64]| predicted_part_sizes(qs).unwrap();
        assert_eq!(p(&[2, 3]), PartSizePrediction { unit_count: 2, zstar_count: 3 });
        assert_eq!(p(&[2, 2]), PartSizePrediction { unit_count: 1, zstar_count: 2 });
        assert_eq!(p(&[2, 4]), PartSizePrediction { unit_count: 3, zstar_count: 4 });
        assert!(matches!(predicted_part_sizes(&[6]), Err(Error::NotPrimePower(6))));
        assert_eq!(predicted_single_support_degree(&[2, 3], 0).unwrap(), 2);
        assert_eq!(predicted_single_support_degree(&[2, 3], 1).unwrap(), 1);
        assert_eq!(predicted_single_support_degree(&[2, 2, 2], 2).unwrap(), 1);
        assert!(matches!(
            predicted_single_support_degree(&[2, 3], 2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }
}
