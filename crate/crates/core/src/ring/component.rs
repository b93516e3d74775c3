//! Arithmetic for a single ring component on integer-encoded elements.
//! Index 0 is always zero and index 1 is always one.

use super::field::{self, FieldOps, GaloisArith};
use super::{ComponentSpec, GaloisFieldSpec};
use crate::numtheory::gcd;

/// Symbol used when printing extension-field elements.
pub(crate) const FIELD_SYMBOL: &str = "a";

#[derive(Debug, Clone)]
pub(crate) enum Component {
    Zmod {
        n: u64,
    },
    Field(GaloisArith),
    Quotient {
        base: GaloisArith,
        var: String,
        // base-field indices, monic, degree m
        modulus: Vec<u32>,
        order: usize,
    },
}

fn arith(spec: &GaloisFieldSpec) -> GaloisArith {
    let modulus: Vec<u32> = spec.modulus().iter().map(|&c| c as u32).collect();
    GaloisArith::extension(spec.p() as u32, &modulus)
}

impl Component {
    pub fn new(spec: &ComponentSpec) -> Self {
        match spec {
            ComponentSpec::Zmod { n } => Component::Zmod { n: *n },
            ComponentSpec::GaloisField(f) => Component::Field(arith(f)),
            ComponentSpec::PolyQuotient { base, var, modulus } => {
                let order = spec.order().expect("validated") as usize;
                Component::Quotient {
                    base: arith(base),
                    var: var.clone(),
                    // prime-subfield coefficients embed as the same indices
                    modulus: modulus.iter().map(|&c| c as u32).collect(),
                    order,
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Component::Zmod { n } => *n as usize,
            Component::Field(f) => f.size() as usize,
            Component::Quotient { order, .. } => *order,
        }
    }

    fn degree(&self) -> usize {
        match self {
            Component::Quotient { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    fn coeffs(&self, base: &GaloisArith, mut a: usize) -> Vec<u32> {
        let q = base.size() as usize;
        (0..self.degree())
            .map(|_| {
                let c = (a % q) as u32;
                a /= q;
                c
            })
            .collect()
    }

    fn from_coeffs(base: &GaloisArith, coeffs: &[u32]) -> usize {
        let q = base.size() as usize;
        coeffs.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match self {
            Component::Zmod { n } => (a + b) % *n as usize,
            Component::Field(f) => f.add(a as u32, b as u32) as usize,
            Component::Quotient { base, .. } => {
                let q = base.size() as usize;
                let (mut a, mut b, mut r, mut place) = (a, b, 0, 1);
                for _ in 0..self.degree() {
                    r += base.add((a % q) as u32, (b % q) as u32) as usize * place;
                    a /= q;
                    b /= q;
                    place *= q;
                }
                r
            }
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        match self {
            Component::Zmod { n } => (*n as usize - a) % *n as usize,
            Component::Field(f) => f.neg(a as u32) as usize,
            Component::Quotient { base, .. } => {
                let c: Vec<u32> = self.coeffs(base, a).iter().map(|&x| base.neg(x)).collect();
                Self::from_coeffs(base, &c)
            }
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Component::Zmod { n } => ((a as u64 * b as u64) % n) as usize,
            Component::Field(f) => f.mul(a as u32, b as u32) as usize,
            Component::Quotient { base, modulus, .. } => {
                let m = self.degree();
                let prod = field::poly_mul(base, &self.coeffs(base, a), &self.coeffs(base, b));
                let mut r = field::poly_rem(base, &prod, modulus);
                r.resize(m, 0);
                Self::from_coeffs(base, &r)
            }
        }
    }

    /// Unit test by structure: gcd for `Z/n`, nonzero for fields, polynomial gcd for quotients.
    pub fn is_unit_structural(&self, a: usize) -> bool {
        match self {
            Component::Zmod { n } => gcd(a as u64, *n) == 1,
            Component::Field(_) => a != 0,
            Component::Quotient { base, modulus, .. } => {
                let g = field::poly_gcd(base, &self.coeffs(base, a), modulus);
                field::degree(&g) == Some(0)
            }
        }
    }

    /// Additive order of each digit position and the element with a single 1 there.
    pub fn digit_basis(&self) -> Vec<(u64, usize)> {
        match self {
            Component::Zmod { n } => vec![(*n, 1)],
            Component::Field(f) => (0..f.k())
                .map(|j| (f.p() as u64, (f.p() as usize).pow(j)))
                .collect(),
            Component::Quotient { base, .. } => {
                let mut out = Vec::new();
                let q = base.size() as usize;
                for i in 0..self.degree() {
                    for j in 0..base.k() {
                        out.push((base.p() as u64, q.pow(i as u32) * (base.p() as usize).pow(j)));
                    }
                }
                out
            }
        }
    }

    pub fn digits(&self, a: usize) -> Vec<u32> {
        match self {
            Component::Zmod { .. } => vec![a as u32],
            Component::Field(f) => f.digits(a as u32),
            Component::Quotient { base, .. } => self
                .coeffs(base, a)
                .into_iter()
                .flat_map(|c| base.digits(c))
                .collect(),
        }
    }

    pub fn from_digits(&self, digits: &[u32]) -> Option<usize> {
        match self {
            Component::Zmod { n } => match digits {
                [d] if (*d as u64) < *n => Some(*d as usize),
                _ => None,
            },
            Component::Field(f) => {
                if digits.len() != f.k() as usize || digits.iter().any(|&d| d >= f.p()) {
                    return None;
                }
                Some(f.from_digits(digits) as usize)
            }
            Component::Quotient { base, .. } => {
                let k = base.k() as usize;
                if digits.len() != self.degree() * k || digits.iter().any(|&d| d >= base.p()) {
                    return None;
                }
                let coeffs: Vec<u32> = digits.chunks(k).map(|c| base.from_digits(c)).collect();
                Some(Self::from_coeffs(base, &coeffs))
            }
        }
    }

    pub fn format(&self, a: usize) -> String {
        match self {
            Component::Zmod { .. } => a.to_string(),
            Component::Field(f) => f.format(a as u32, FIELD_SYMBOL),
            Component::Quotient { base, var, .. } => {
                let coeffs = self.coeffs(base, a);
                field::format_poly(
                    &coeffs,
                    var,
                    |c| base.format(c, FIELD_SYMBOL),
                    |c| base.k() > 1 && base.format(c, FIELD_SYMBOL).contains('+'),
                )
            }
        }
    }

    /// `(label, modulus)` for components whose elements print in the field symbol.
    pub fn modulus_note(&self) -> Option<(String, String)> {
        let f = match self {
            Component::Field(f) | Component::Quotient { base: f, .. } => f,
            Component::Zmod { .. } => return None,
        };
        if f.k() == 1 {
            return None;
        }
        let poly = field::format_poly(f.modulus(), FIELD_SYMBOL, |c| c.to_string(), |_| false);
        Some((format!("GF({})", f.size()), poly))
    }

    /// Frobenius `x -> x^p` when the component is a field.
    pub fn frobenius(&self, a: usize) -> Option<usize> {
        match self {
            Component::Field(f) => Some(f.pow(a as u32, f.p() as u64) as usize),
            Component::Zmod { .. } => Some(a),
            Component::Quotient { .. } => None,
        }
    }
}
