//! Ring enumeration, per-ring reports, claim audits and the rigidity audit.

mod claims;
mod enumerate;
mod rigidity;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    analyze, find_k33, planarity_bipartite, GraphStats, K33Witness, KuratowskiSubdivision, PlanarityCertificate,
    PlanarityVerdict,
};
use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::ring::{ReducedDecomposition, Ring, RingInvariants, RingSpec, DEFAULT_BRUTE_FORCE_CAP};
use crate::symmetry::{canonical_form, graph_aut, phi_analysis, GraphAutReport, PhiReport};

pub use claims::{
    claim_audit, graph_mapping, verify_claim_certificate, verify_graph_isomorphism, Certificate, ClaimId, ClaimVerdict, Verdict,
};
pub use enumerate::{
    census_specs, enumerate_reduced_specs, enumerate_test_rings, local_catalog, nonreduced_catalog,
    reduced_multisets, squarefree_zmod_specs,
};
pub use rigidity::{rigidity_audit, rings_isomorphic, RigidityRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOptions {
    pub reduced_max: u64,
    pub nonreduced_max: u64,
    pub phi_max: u64,
    pub brute_force_cap: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            reduced_max: 200,
            nonreduced_max: 64,
            phi_max: 32,
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub zstar_count: usize,
    pub unit_count: usize,
    pub edge_count: usize,
    pub stats: GraphStats,
    pub k33: Option<K33Witness>,
    pub planarity: PlanarityVerdict,
    /// Present for non-planar graphs without a K_{3,3} subgraph.
    pub kuratowski: Option<KuratowskiSubdivision>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub spec_text: String,
    pub invariants: RingInvariants,
    pub decomposition: Option<ReducedDecomposition>,
    pub graph_summary: GraphSummary,
    pub aut: GraphAutReport,
    /// Computed for rings up to the configured order bound.
    pub phi: Option<PhiReport>,
    /// Hex SHA-256 of the canonical form of B(R).
    pub canonical_form_digest: String,
}

pub fn analyze_ring(spec: &RingSpec) -> Result<RingReport> {
    analyze_ring_with(spec, &CensusOptions::default())
}

pub fn analyze_ring_with(spec: &RingSpec, opts: &CensusOptions) -> Result<RingReport> {
    let ring = Ring::new(spec);
    let g = build_graph(&ring);
    let b = &g.graph;
    let planarity = planarity_bipartite(b);
    let kuratowski = match planarity.certificate {
        PlanarityCertificate::Kuratowski(sub) => Some(sub),
        _ => None,
    };
    let phi = if ring.order() as u64 <= opts.phi_max {
        match phi_analysis(&ring, opts.brute_force_cap) {
            Ok(p) => Some(p),
            Err(Error::Cap { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(RingReport {
        spec_text: spec.to_string(),
        invariants: ring.invariants(),
        decomposition: ring.reduced_decomposition().ok(),
        graph_summary: GraphSummary {
            zstar_count: b.left_count(),
            unit_count: b.right_count(),
            edge_count: b.edge_count(),
            stats: analyze(b),
            k33: find_k33(b),
            planarity: planarity.verdict,
            kuratowski,
        },
        aut: graph_aut(b)?,
        phi,
        canonical_form_digest: canonical_form(&b.to_simple())?.digest(),
    })
}

/// Reports in the given order; analyses run on the current rayon pool.
pub fn analyze_all(specs: &[RingSpec], opts: &CensusOptions) -> Result<Vec<RingReport>> {
    specs.par_iter().map(|s| analyze_ring_with(s, opts)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub options: CensusOptions,
    pub reports: Vec<RingReport>,
    pub verdicts: Vec<ClaimVerdict>,
}

pub fn run_census(opts: &CensusOptions) -> Result<Census> {
    let specs = census_specs(opts.reduced_max, opts.nonreduced_max);
    let reports = analyze_all(&specs, opts)?;
    let verdicts = claim_audit(&reports);
    Ok(Census {
        options: *opts,
        reports,
        verdicts,
    })
}
