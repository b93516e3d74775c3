use serde::{Deserialize, Serialize};

use super::component::Component;
use super::RingSpec;
use crate::error::{Error, Result};

/// A ring element as one digit vector per component: `[value]` for `Z/n`,
/// `k` coefficients (low degree first) for `GF(p^k)`, and `m * k` digits for
/// a degree-`m` quotient over `GF(p^k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    pub parts: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementClass {
    Zero,
    Unit,
    ZeroDivisorStar,
}

/// A finite commutative ring with elements addressed by their canonical
/// index: mixed radix over components, last component fastest.
#[derive(Debug, Clone)]
pub struct Ring {
    spec: RingSpec,
    comps: Vec<Component>,
    orders: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    one: usize,
    unit_mask: Vec<bool>,
}

impl Ring {
    pub fn new(spec: &RingSpec) -> Self {
        let comps: Vec<Component> = spec.components().iter().map(Component::new).collect();
        let orders: Vec<usize> = comps.iter().map(Component::order).collect();
        let mut strides = vec![1; comps.len()];
        for i in (0..comps.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let order = orders.iter().product();
        let one = strides.iter().sum();
        let comp_units: Vec<Vec<bool>> = comps
            .iter()
            .map(|c| (0..c.order()).map(|a| c.is_unit_structural(a)).collect())
            .collect();
        let mut ring = Ring {
            spec: spec.clone(),
            comps,
            orders,
            strides,
            order,
            one,
            unit_mask: Vec::new(),
        };
        ring.unit_mask = (0..order)
            .map(|x| (0..ring.comps.len()).all(|i| comp_units[i][ring.part(x, i)]))
            .collect();
        ring
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Ring::new(&RingSpec::parse(text)?))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub(crate) fn components(&self) -> &[Component] {
        &self.comps
    }

    pub(crate) fn part(&self, x: usize, i: usize) -> usize {
        (x / self.strides[i]) % self.orders[i]
    }

    pub(crate) fn compose(&self, parts: impl IntoIterator<Item = usize>) -> usize {
        parts
            .into_iter()
            .zip(&self.strides)
            .map(|(p, s)| p * s)
            .sum()
    }

    fn zip_with(&self, a: usize, b: usize, op: impl Fn(&Component, usize, usize) -> usize) -> usize {
        self.compose(
            self.comps
                .iter()
                .enumerate()
                .map(|(i, c)| op(c, self.part(a, i), self.part(b, i))),
        )
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, Component::add)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, Component::mul)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.compose(
            self.comps
                .iter()
                .enumerate()
                .map(|(i, c)| c.neg(self.part(a, i))),
        )
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n * a` by repeated doubling.
    pub fn scale(&self, mut n: u64, a: usize) -> usize {
        let (mut acc, mut base) = (0, a);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn element(&self, x: usize) -> Element {
        Element {
            parts: (0..self.comps.len())
                .map(|i| self.comps[i].digits(self.part(x, i)))
                .collect(),
        }
    }

    pub fn index_of(&self, e: &Element) -> Result<usize> {
        if e.parts.len() != self.comps.len() {
            return Err(Error::InvalidElement);
        }
        let parts = self
            .comps
            .iter()
            .zip(&e.parts)
            .map(|(c, d)| c.from_digits(d).ok_or(Error::InvalidElement))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.compose(parts))
    }

    /// All elements in canonical order; the first is zero.
    pub fn elements(&self) -> Vec<Element> {
        (0..self.order).map(|x| self.element(x)).collect()
    }

    pub fn elem_add(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.element(self.add(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn elem_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.element(self.mul(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn elem_neg(&self, a: &Element) -> Result<Element> {
        Ok(self.element(self.neg(self.index_of(a)?)))
    }

    /// Unit status from the precomputed componentwise table.
    pub fn is_unit(&self, x: usize) -> bool {
        self.unit_mask[x]
    }

    /// Membership in `Z(R)`, which includes zero.
    pub fn is_zero_divisor(&self, x: usize) -> bool {
        !self.unit_mask[x]
    }

    /// `x` is a unit iff some `s` has `x * s = 1` (linear scan).
    pub fn has_inverse_by_scan(&self, x: usize) -> bool {
        (0..self.order).any(|s| self.mul(x, s) == self.one)
    }

    /// `x` is a zero-divisor iff some `s != 0` has `x * s = 0` (linear scan).
    pub fn annihilated_by_scan(&self, x: usize) -> bool {
        (1..self.order).any(|s| self.mul(x, s) == 0)
    }

    /// Classification by scanning for an inverse.
    pub fn classify(&self, x: usize) -> ElementClass {
        if x == 0 {
            ElementClass::Zero
        } else if self.has_inverse_by_scan(x) {
            ElementClass::Unit
        } else {
            ElementClass::ZeroDivisorStar
        }
    }

    pub fn classify_element(&self, e: &Element) -> Result<ElementClass> {
        Ok(self.classify(self.index_of(e)?))
    }

    /// Unit flags for every element computed purely by inverse scans.
    pub fn unit_table_by_scan(&self) -> Vec<bool> {
        let mut units = vec![false; self.order];
        for a in 1..self.order {
            if units[a] {
                continue;
            }
            if let Some(b) = (1..self.order).find(|&b| self.mul(a, b) == self.one) {
                units[a] = true;
                units[b] = true;
            }
        }
        units
    }

    /// `(Z(R)*, U(R))` as index lists in canonical order.
    pub fn vertex_sets(&self) -> (Vec<usize>, Vec<usize>) {
        (1..self.order).partition(|&x| !self.unit_mask[x])
    }

    pub fn label(&self, x: usize) -> String {
        let parts: Vec<String> = (0..self.comps.len())
            .map(|i| self.comps[i].format(self.part(x, i)))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(", "))
        }
    }

    pub fn label_element(&self, e: &Element) -> Result<String> {
        Ok(self.label(self.index_of(e)?))
    }

    /// Defining polynomials of the extension fields used in labels.
    pub fn modulus_notes(&self) -> Vec<(String, String)> {
        let mut notes: Vec<(String, String)> = Vec::new();
        for c in &self.comps {
            if let Some(n) = c.modulus_note() {
                if !notes.contains(&n) {
                    notes.push(n);
                }
            }
        }
        notes
    }
}
