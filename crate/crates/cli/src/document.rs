use bzu_core::census::{Census, RigidityRow, RingReport};
use bzu_core::ring::AutMethod;
use bzu_core::symmetry::{GraphAutReport, PhiReport};
use serde::{Deserialize, Serialize};

/// Bumped whenever a serialized field changes.
pub const SCHEMA_VERSION: &str = "1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub tool_version: String,
    pub payload: Payload,
}

impl ReportDocument {
    pub fn new(payload: Payload) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            payload,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "snake_case")]
pub enum Payload {
    RingReport(Box<RingReport>),
    Census(Box<Census>),
    Rigidity(Vec<RigidityRow>),
    Isocheck(IsocheckReport),
    Aut(Box<AutSummary>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCheck {
    pub seed: u64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsocheckReport {
    pub left: String,
    pub right: String,
    pub graphs_isomorphic: bool,
    pub rings_isomorphic: Option<bool>,
    pub reason: String,
    pub left_digest: String,
    pub right_digest: String,
    /// Vertex mapping as element labels, checked edge by edge.
    pub mapping: Option<Vec<(String, String)>>,
    /// Canonical form of a seeded random relabeling of the left graph.
    pub self_check: Option<SelfCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutSummary {
    pub spec_text: String,
    pub ring_aut_order: Option<u64>,
    pub ring_aut_method: Option<AutMethod>,
    pub graph: GraphAutReport,
    pub phi: Option<PhiReport>,
}
