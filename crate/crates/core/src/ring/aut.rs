use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::component::Component;
use super::Ring;
use crate::error::{Error, Result};

pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AutMethod {
    /// Frobenius on each field factor plus swaps of equal factors.
    Exact,
    /// The ring is generated additively by 1.
    Trivial,
    BruteForce,
}

/// Ring automorphisms, each generator given as the image of every element index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingAutDescription {
    pub order: u64,
    pub generators: Vec<Vec<usize>>,
    pub method: AutMethod,
}

impl RingAutDescription {
    /// All group elements, by closure of the generators. Identity first.
    pub fn elements(&self, ring_order: usize) -> Vec<Vec<usize>> {
        let id: Vec<usize> = (0..ring_order).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let h: Vec<usize> = out[i].iter().map(|&x| g[x]).collect();
                if seen.insert(h.clone()) {
                    out.push(h);
                }
            }
            i += 1;
        }
        out
    }
}

impl Ring {
    fn field_degree(c: &Component) -> Option<u64> {
        match c {
            Component::Field(f) => Some(f.k() as u64),
            Component::Zmod { n } if crate::numtheory::is_prime(*n) => Some(1),
            _ => None,
        }
    }

    /// Ring automorphism group. Products of fields use the closed form; other
    /// rings above `cap` elements are rejected.
    pub fn aut_group(&self, cap: u64) -> Result<RingAutDescription> {
        if self.characteristic() == self.order() as u64 {
            return Ok(RingAutDescription {
                order: 1,
                generators: Vec::new(),
                method: AutMethod::Trivial,
            });
        }
        let degrees: Option<Vec<u64>> = self.components().iter().map(Self::field_degree).collect();
        if let Some(degrees) = degrees {
            return Ok(self.aut_exact(&degrees));
        }
        if self.order() as u64 > cap {
            return Err(Error::Cap {
                what: "ring order for automorphism search",
                size: self.order(),
                cap: cap as usize,
            });
        }
        Ok(self.aut_brute_force())
    }

    fn aut_exact(&self, degrees: &[u64]) -> RingAutDescription {
        let comps = self.components();
        let mut generators = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            if degrees[i] > 1 {
                generators.push(self.map_parts(|parts| {
                    parts[i] = c.frobenius(parts[i]).unwrap();
                }));
            }
        }
        let mut multiplicity: BTreeMap<usize, u64> = BTreeMap::new();
        for c in comps {
            *multiplicity.entry(c.order()).or_default() += 1;
        }
        for i in 0..comps.len() {
            let next = (i + 1..comps.len()).find(|&j| comps[j].order() == comps[i].order());
            if let Some(j) = next {
                generators.push(self.map_parts(|parts| parts.swap(i, j)));
            }
        }
        let mut order: u64 = degrees.iter().product();
        for &m in multiplicity.values() {
            order *= (1..=m).product::<u64>();
        }
        RingAutDescription {
            order,
            generators,
            method: AutMethod::Exact,
        }
    }

    fn map_parts(&self, f: impl Fn(&mut Vec<usize>)) -> Vec<usize> {
        let n = self.components().len();
        (0..self.order())
            .map(|x| {
                let mut parts: Vec<usize> = (0..n).map(|i| self.part(x, i)).collect();
                f(&mut parts);
                self.compose(parts)
            })
            .collect()
    }

    /// Additive basis `e_j` of the ring with additive orders, matching the digit order.
    fn ring_digit_basis(&self) -> Vec<(u64, usize)> {
        let n = self.components().len();
        let mut out = Vec::new();
        for (i, c) in self.components().iter().enumerate() {
            for (ord, b) in c.digit_basis() {
                let parts = (0..n).map(|k| if k == i { b } else { 0 });
                out.push((ord, self.compose(parts)));
            }
        }
        out
    }

    fn ring_digits(&self, x: usize) -> Vec<u32> {
        self.components()
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.digits(self.part(x, i)))
            .collect()
    }

    fn additive_order(&self, x: usize) -> u64 {
        let mut y = x;
        let mut n = 1;
        while y != 0 {
            y = self.add(y, x);
            n += 1;
        }
        n
    }

    fn aut_brute_force(&self) -> RingAutDescription {
        let basis = self.ring_digit_basis();
        let digits: Vec<Vec<u32>> = (0..self.order()).map(|x| self.ring_digits(x)).collect();
        // products of basis elements, checkable once every digit they use is assigned
        let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); basis.len()];
        for i in 0..basis.len() {
            for j in i..basis.len() {
                let prod = self.mul(basis[i].1, basis[j].1);
                let last = digits[prod]
                    .iter()
                    .rposition(|&d| d != 0)
                    .unwrap_or(0)
                    .max(j);
                checks[last].push((i, j, prod));
            }
        }
        let one_last = digits[self.one()].iter().rposition(|&d| d != 0).unwrap();
        let candidates: Vec<Vec<usize>> = basis
            .iter()
            .map(|&(ord, _)| {
                (1..self.order())
                    .filter(|&y| self.additive_order(y) == ord)
                    .collect()
            })
            .collect();

        let mut images = vec![0usize; basis.len()];
        let mut found = Vec::new();
        self.aut_search(0, &mut images, &candidates, &checks, &digits, one_last, &mut found);

        let all: Vec<Vec<usize>> = found;
        let mut generators: Vec<Vec<usize>> = Vec::new();
        let mut span = RingAutDescription {
            order: 0,
            generators: Vec::new(),
            method: AutMethod::BruteForce,
        };
        let mut closure: HashSet<Vec<usize>> = span.elements(self.order()).into_iter().collect();
        for g in &all {
            if !closure.contains(g) {
                generators.push(g.clone());
                span.generators = generators.clone();
                closure = span.elements(self.order()).into_iter().collect();
            }
        }
        span.order = all.len() as u64;
        span
    }

    fn apply_partial(&self, images: &[usize], digits: &[u32]) -> usize {
        digits
            .iter()
            .zip(images)
            .fold(0, |acc, (&d, &img)| self.add(acc, self.scale(d as u64, img)))
    }

    #[allow(clippy::too_many_arguments)]
    fn aut_search(
        &self,
        depth: usize,
        images: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        checks: &[Vec<(usize, usize, usize)>],
        digits: &[Vec<u32>],
        one_last: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        if depth == images.len() {
            let map: Vec<usize> = digits.iter().map(|d| self.apply_partial(images, d)).collect();
            let mut hit = vec![false; map.len()];
            for &y in &map {
                if std::mem::replace(&mut hit[y], true) {
                    return;
                }
            }
            found.push(map);
            return;
        }
        for &y in &candidates[depth] {
            images[depth] = y;
            let ok = checks[depth].iter().all(|&(i, j, prod)| {
                self.mul(images[i], images[j]) == self.apply_partial(&images[..=depth], &digits[prod][..=depth])
            }) && (depth != one_last
                || self.apply_partial(&images[..=depth], &digits[self.one()][..=depth]) == self.one());
            if ok {
                self.aut_search(depth + 1, images, candidates, checks, digits, one_last, found);
            }
        }
        images[depth] = 0;
    }

    /// Exhaustive check that `map` fixes 0 and 1 and preserves both operations.
    pub fn is_ring_automorphism(&self, map: &[usize]) -> bool {
        let n = self.order();
        if map.len() != n || map[0] != 0 || map[self.one()] != self.one() {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in map {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        (0..n).all(|a| {
            (a..n).all(|b| {
                map[self.add(a, b)] == self.add(map[a], map[b])
                    && map[self.mul(a, b)] == self.mul(map[a], map[b])
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aut(s: &str) -> RingAutDescription {
        Ring::parse(s).unwrap().aut_group(DEFAULT_BRUTE_FORCE_CAP).unwrap()
    }

    #[test]
    fn closed_form_orders() {
        assert_eq!(aut("GF(2) x GF(2) x GF(2)").order, 6);
        assert_eq!(aut("GF(4)").order, 2);
        assert_eq!(aut("GF(4) x GF(4)").order, 8);
        assert_eq!(aut("GF(8) x GF(2)").order, 3);
        assert_eq!(aut("Z/6").order, 1);
        assert_eq!(aut("Z/6").method, AutMethod::Trivial);
    }

    #[test]
    fn closure_matches_order() {
        for s in ["GF(2) x GF(2) x GF(2)", "GF(4) x GF(4)", "GF(9) x GF(3) x GF(3)"] {
            let r = Ring::parse(s).unwrap();
            let a = r.aut_group(DEFAULT_BRUTE_FORCE_CAP).unwrap();
            let all = a.elements(r.order());
            assert_eq!(all.len() as u64, a.order, "{s}");
            if r.order() <= 64 {
                assert!(all.iter().all(|g| r.is_ring_automorphism(g)));
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_closed_form() {
        for s in ["GF(4)", "GF(2) x GF(2) x GF(2)", "GF(4) x GF(2)", "GF(8)", "GF(3) x GF(9)"] {
            let r = Ring::parse(s).unwrap();
            let bf = r.aut_brute_force();
            assert_eq!(bf.order, aut(s).order, "{s}");
        }
    }

    #[test]
    fn gf4_has_exactly_two_maps_by_exhaustion() {
        let r = Ring::parse("GF(4)").unwrap();
        let mut count = 0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if r.is_ring_automorphism(&[a, b, c, d]) {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 2);
    }

    #[test]
    fn non_reduced_rings() {
        // t -> t + 1 style maps: GF(2)[t]/(t^2) has only the identity
        assert_eq!(aut("GF(2)[t]/(t^2)").order, 1);
        // t -> ct for c a unit of GF(3)
        assert_eq!(aut("GF(3)[t]/(t^2)").order, 2);
        assert_eq!(aut("GF(4)[t]/(t^2)").order, 6);
        let r = Ring::parse("GF(2)[t]/(t^3)").unwrap();
        let a = r.aut_group(64).unwrap();
        assert_eq!(a.method, AutMethod::BruteForce);
        // t -> t + t^2 and identity
        assert_eq!(a.order, 2);
        for g in a.elements(r.order()) {
            assert!(r.is_ring_automorphism(&g));
        }
    }

    #[test]
    fn cap_applies_to_brute_force() {
        let r = Ring::parse("GF(2)[t]/(t^7)").unwrap();
        assert!(matches!(r.aut_group(64), Err(Error::Cap { .. })));
    }
}
