use serde::{Deserialize, Serialize};

use super::component::Component;
use super::field::{self, FieldOps};
use super::{Element, Ring};
use crate::error::{Error, Result};
use crate::numtheory::{ceil_log2, factorize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInvariants {
    pub order: u64,
    pub characteristic: u64,
    pub unit_count: u64,
    pub zstar_count: u64,
    pub is_field: bool,
    pub is_local: bool,
    pub is_reduced: bool,
    /// The non-units, present exactly when the ring is local.
    pub maximal_ideal: Option<Vec<Element>>,
}

/// Field orders `q_1 <= ... <= q_k` of a reduced ring `R = F_{q_1} x ... x F_{q_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedDecomposition {
    pub field_orders: Vec<u64>,
}

// Above this many non-units the pairwise closure test is replaced by the
// equivalent finite-ring criterion "1 - z is a unit for every non-unit z".
const PAIRWISE_LOCALITY_LIMIT: usize = 4096;

impl Ring {
    pub fn characteristic(&self) -> u64 {
        let mut x = self.one();
        let mut n = 1;
        while x != 0 {
            x = self.add(x, self.one());
            n += 1;
        }
        n
    }

    /// Nilpotent iff repeated squaring reaches zero within `ceil(log2 |R|) + 1` steps.
    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut y = x;
        for _ in 0..=ceil_log2(self.order() as u64) {
            if y == 0 {
                return true;
            }
            y = self.mul(y, y);
        }
        y == 0
    }

    pub fn first_nilpotent(&self) -> Option<usize> {
        (1..self.order()).find(|&x| self.is_nilpotent(x))
    }

    pub fn is_local(&self) -> bool {
        let non_units: Vec<usize> = (0..self.order()).filter(|&x| !self.is_unit(x)).collect();
        if non_units.len() <= PAIRWISE_LOCALITY_LIMIT {
            non_units
                .iter()
                .all(|&a| non_units.iter().all(|&b| !self.is_unit(self.add(a, b))))
        } else {
            non_units
                .iter()
                .all(|&z| self.is_unit(self.sub(self.one(), z)))
        }
    }

    pub fn invariants(&self) -> RingInvariants {
        let (zstar, units) = self.vertex_sets();
        let is_local = self.is_local();
        let is_reduced = self.first_nilpotent().is_none();
        RingInvariants {
            order: self.order() as u64,
            characteristic: self.characteristic(),
            unit_count: units.len() as u64,
            zstar_count: zstar.len() as u64,
            is_field: zstar.is_empty(),
            is_local,
            is_reduced,
            maximal_ideal: is_local.then(|| {
                (0..self.order())
                    .filter(|&x| !self.is_unit(x))
                    .map(|x| self.element(x))
                    .collect()
            }),
        }
    }

    /// Field orders of the reduced ring, via CRT on `Z/n` components and
    /// factorization of quotient moduli into distinct irreducibles.
    pub fn reduced_decomposition(&self) -> Result<ReducedDecomposition> {
        if let Some(x) = self.first_nilpotent() {
            return Err(Error::NotReduced(self.label(x)));
        }
        let mut orders = Vec::new();
        for c in self.components() {
            match c {
                Component::Zmod { n } => {
                    for (p, e) in factorize(*n) {
                        debug_assert_eq!(e, 1);
                        orders.push(p);
                    }
                }
                Component::Field(f) => orders.push(f.size() as u64),
                Component::Quotient { base, modulus, .. } => {
                    for (g, mult) in field::factor_monic(base, modulus) {
                        debug_assert_eq!(mult, 1);
                        let d = field::degree(&g).unwrap() as u32;
                        orders.push((base.size() as u64).pow(d));
                    }
                }
            }
        }
        orders.sort_unstable();
        Ok(ReducedDecomposition {
            field_orders: orders,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_is_local_not_reduced() {
        let r = Ring::parse("Z/4").unwrap();
        let inv = r.invariants();
        assert!(inv.is_local);
        assert!(!inv.is_field);
        assert!(!inv.is_reduced);
        let m = inv.maximal_ideal.unwrap();
        assert_eq!(m, vec![r.element(0), r.element(2)]);
        assert!(matches!(r.reduced_decomposition(), Err(Error::NotReduced(_))));
    }

    #[test]
    fn dual_numbers() {
        let inv = Ring::parse("GF(2)[t]/(t^2)").unwrap().invariants();
        assert_eq!(inv.characteristic, 2);
        assert!(inv.is_local);
        assert!(!inv.is_reduced);
        assert_eq!(inv.zstar_count, 1);
        assert_eq!(inv.unit_count, 2);
    }

    #[test]
    fn z6_reduced_not_local() {
        let r = Ring::parse("Z/6").unwrap();
        let inv = r.invariants();
        assert!(!inv.is_local);
        assert!(inv.is_reduced);
        assert!(inv.maximal_ideal.is_none());
        assert_eq!(inv.order, inv.unit_count + inv.zstar_count + 1);
        assert_eq!(r.reduced_decomposition().unwrap().field_orders, vec![2, 3]);
    }

    #[test]
    fn decompositions() {
        let d = |s: &str| Ring::parse(s).unwrap().reduced_decomposition().unwrap().field_orders;
        assert_eq!(d("GF(2) x GF(4)"), vec![2, 4]);
        assert_eq!(d("GF(2)[t]/(t^2 + t)"), vec![2, 2]);
        assert_eq!(d("GF(2)[t]/(t^3 + 1)"), vec![2, 4]);
        assert_eq!(d("Z/30 x GF(9)"), vec![2, 3, 5, 9]);
        assert_eq!(d("GF(4)[x]/(x^2 + x + 1)"), vec![4, 4]);
    }

    #[test]
    fn characteristic_of_products() {
        assert_eq!(Ring::parse("Z/4 x GF(2)").unwrap().characteristic(), 4);
        assert_eq!(Ring::parse("GF(9) x Z/5").unwrap().characteristic(), 15);
    }

    #[test]
    fn large_local_ring_uses_unit_criterion() {
        let r = Ring::parse("Z/16384").unwrap();
        assert!(r.is_local());
        let s = Ring::parse("Z/8192 x GF(2)").unwrap();
        assert!(!s.is_local());
    }
}
