use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::Bipartite;

/// Three left and three right vertices with all nine edges present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct K33Witness {
    pub left_triple: [usize; 3],
    pub right_triple: [usize; 3],
}

impl K33Witness {
    pub fn verify(&self, b: &Bipartite) -> bool {
        let distinct = |t: &[usize; 3]| t[0] != t[1] && t[0] != t[2] && t[1] != t[2];
        distinct(&self.left_triple)
            && distinct(&self.right_triple)
            && self.left_triple.iter().all(|&l| {
                l < b.left_count()
                    && self
                        .right_triple
                        .iter()
                        .all(|&r| r < b.right_count() && b.has_edge(l, r))
            })
    }
}

/// First left triple (lexicographic) whose common neighbourhood has three members.
pub fn find_k33(b: &Bipartite) -> Option<K33Witness> {
    let n = b.left_count();
    let mut ab = FixedBitSet::with_capacity(b.right_count());
    for x in 0..n {
        if b.neighbors(x).count_ones(..) < 3 {
            continue;
        }
        for y in x + 1..n {
            ab.clone_from(b.neighbors(x));
            ab.intersect_with(b.neighbors(y));
            if ab.count_ones(..) < 3 {
                continue;
            }
            for z in y + 1..n {
                let mut common = b.neighbors(z).intersection(&ab);
                if let (Some(r0), Some(r1), Some(r2)) = (common.next(), common.next(), common.next()) {
                    return Some(K33Witness {
                        left_triple: [x, y, z],
                        right_triple: [r0, r1, r2],
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_k33() {
        let edges = (0..3).flat_map(|l| (0..3).map(move |r| (l, r)));
        let b = Bipartite::from_edges(3, 3, edges);
        let w = find_k33(&b).unwrap();
        assert_eq!(w.left_triple, [0, 1, 2]);
        assert!(w.verify(&b));
    }

    #[test]
    fn k33_minus_an_edge() {
        let edges = (0..3)
            .flat_map(|l| (0..3).map(move |r| (l, r)))
            .filter(|&e| e != (1, 1));
        assert!(find_k33(&Bipartite::from_edges(3, 3, edges)).is_none());
    }

    #[test]
    fn verify_rejects_repeats() {
        let b = Bipartite::from_edges(3, 3, (0..3).flat_map(|l| (0..3).map(move |r| (l, r))));
        let w = K33Witness {
            left_triple: [0, 0, 1],
            right_triple: [0, 1, 2],
        };
        assert!(!w.verify(&b));
    }
}
