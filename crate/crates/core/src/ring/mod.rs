//! Finite commutative rings given as products of `Z/n`, `GF(q)` and
//! `GF(q)[t]/(f)` components.

mod arith;
mod aut;
mod component;
pub(crate) mod field;
mod invariants;
mod parse;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, prime_power};

pub use arith::{Element, ElementClass, Ring};
pub use aut::{AutMethod, RingAutDescription, DEFAULT_BRUTE_FORCE_CAP};
pub use invariants::{ReducedDecomposition, RingInvariants};

/// Default upper bound on the number of ring elements.
pub const DEFAULT_ORDER_CAP: u64 = 65536;

/// A Galois field `GF(p^k)` together with its defining polynomial over `F_p`
/// (coefficients low degree first, monic, length `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaloisFieldSpec {
    p: u64,
    k: u32,
    modulus: Vec<u64>,
}

impl GaloisFieldSpec {
    /// `GF(q)` with the canonical modulus: the lexicographically least monic
    /// irreducible polynomial of degree `k`.
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > u32::MAX as u64 {
            return Err(Error::OrderCap {
                order: q.to_string(),
                cap: u32::MAX as u64,
            });
        }
        let modulus = field::least_irreducible(p as u32, k)
            .into_iter()
            .map(u64::from)
            .collect();
        Ok(GaloisFieldSpec { p, k, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentSpec {
    Zmod {
        n: u64,
    },
    GaloisField(GaloisFieldSpec),
    /// `base[var]/(modulus)`; the modulus has prime-subfield coefficients
    /// (low degree first) and is monic of degree at least one.
    PolyQuotient {
        base: GaloisFieldSpec,
        var: String,
        modulus: Vec<u64>,
    },
}

impl ComponentSpec {
    pub fn order(&self) -> Option<u64> {
        match self {
            ComponentSpec::Zmod { n } => Some(*n),
            ComponentSpec::GaloisField(f) => Some(f.order()),
            ComponentSpec::PolyQuotient { base, modulus, .. } => {
                base.order().checked_pow(modulus.len() as u32 - 1)
            }
        }
    }

    /// `GF(q)[t]/(t^m)`.
    pub fn truncated_poly(q: u64, m: u32) -> Result<Self> {
        let base = GaloisFieldSpec::new(q)?;
        let mut modulus = vec![0; m as usize];
        modulus.push(1);
        Ok(ComponentSpec::PolyQuotient {
            base,
            var: "t".to_string(),
            modulus,
        })
    }

    fn validate(&self) -> Result<()> {
        match self {
            ComponentSpec::Zmod { n } if *n < 2 => Err(Error::ModulusTooSmall(*n)),
            ComponentSpec::Zmod { .. } => Ok(()),
            ComponentSpec::GaloisField(f) => validate_field(f),
            ComponentSpec::PolyQuotient { base, modulus, .. } => {
                validate_field(base)?;
                if modulus.len() < 2
                    || *modulus.last().unwrap() != 1
                    || modulus.iter().any(|&c| c >= base.p)
                {
                    return Err(Error::BadModulus(format!("{modulus:?}")));
                }
                Ok(())
            }
        }
    }
}

fn validate_field(f: &GaloisFieldSpec) -> Result<()> {
    if !is_prime(f.p) || f.k == 0 {
        return Err(Error::NotPrimePower(f.order()));
    }
    let prime = field::GaloisArith::prime(f.p as u32);
    let modulus: Vec<u32> = f.modulus.iter().map(|&c| c as u32).collect();
    if f.modulus.len() != f.k as usize + 1
        || f.modulus.last() != Some(&1)
        || f.modulus.iter().any(|&c| c >= f.p)
        || !field::is_irreducible(&prime, &modulus)
    {
        return Err(Error::BadModulus(format!("{:?}", f.modulus)));
    }
    Ok(())
}

/// A validated description of a finite commutative ring as an ordered product
/// of components. The total order fits the cap it was validated against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    components: Vec<ComponentSpec>,
}

impl RingSpec {
    pub fn new(components: Vec<ComponentSpec>) -> Result<Self> {
        Self::with_cap(components, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(components: Vec<ComponentSpec>, cap: u64) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Syntax {
                pos: 0,
                expected: "a ring component".into(),
                found: "nothing".into(),
            });
        }
        let mut order: u128 = 1;
        for c in &components {
            c.validate()?;
            let o = c.order().map(u128::from).unwrap_or(u128::MAX);
            order = order.saturating_mul(o);
        }
        if order > cap as u128 {
            let shown = if order == u128::MAX {
                "overflow".to_string()
            } else {
                order.to_string()
            };
            return Err(Error::OrderCap { order: shown, cap });
        }
        Ok(RingSpec { components })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_ring_spec(text, DEFAULT_ORDER_CAP)
    }

    pub fn parse_with_cap(text: &str, cap: u64) -> Result<Self> {
        parse::parse_ring_spec(text, cap)
    }

    /// `GF(q_1) x ... x GF(q_k)`.
    pub fn galois_product(qs: &[u64]) -> Result<Self> {
        let comps = qs
            .iter()
            .map(|&q| GaloisFieldSpec::new(q).map(ComponentSpec::GaloisField))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn zmod(n: u64) -> Result<Self> {
        Self::new(vec![ComponentSpec::Zmod { n }])
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    pub fn order(&self) -> u64 {
        self.components
            .iter()
            .map(|c| c.order().expect("validated"))
            .product()
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::parse(s)
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentSpec::Zmod { n } => write!(f, "Z/{n}"),
            ComponentSpec::GaloisField(g) => write!(f, "GF({})", g.order()),
            ComponentSpec::PolyQuotient { base, var, modulus } => {
                let poly = field::format_poly(modulus, var, |c| c.to_string(), |_| false);
                write!(f, "GF({})[{var}]/({poly})", base.order())
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
