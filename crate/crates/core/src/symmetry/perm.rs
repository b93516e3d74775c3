use serde::{Deserialize, Serialize};

/// A permutation in disjoint-cycle notation, fixed points omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    pub cycles: Vec<Vec<usize>>,
}

impl Permutation {
    pub fn from_map(map: &[usize]) -> Self {
        let mut seen = vec![false; map.len()];
        let mut cycles = Vec::new();
        for s in 0..map.len() {
            if seen[s] || map[s] == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = map[x];
            }
            cycles.push(c);
        }
        Permutation { cycles }
    }

    pub fn to_map(&self, n: usize) -> Vec<usize> {
        let mut map: Vec<usize> = (0..n).collect();
        for c in &self.cycles {
            for i in 0..c.len() {
                map[c[i]] = c[(i + 1) % c.len()];
            }
        }
        map
    }

    pub fn is_identity(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Union-find over vertices, merged along the given permutations.
pub(crate) fn orbits(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
