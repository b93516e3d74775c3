//! Bipartite zero-divisor/unit graphs of finite commutative rings.

pub mod error;
pub mod numtheory;
pub mod analysis;
pub mod census;
pub mod graph;
pub mod ring;
pub mod symmetry;

pub use error::{Error, Result};
pub use ring::{
    AutMethod, ComponentSpec, Element, ElementClass, GaloisFieldSpec, ReducedDecomposition, Ring,
    RingAutDescription, RingInvariants, RingSpec,
};
