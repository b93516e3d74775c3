use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::claims::{graph_mapping, verify_graph_isomorphism, Certificate};
use super::enumerate::{enumerate_reduced_specs, local_catalog, squarefree_zmod_specs};
use crate::error::Result;
use crate::graph::build_graph;
use crate::ring::{Ring, RingSpec};
use crate::symmetry::canonical_form;

/// Local catalog rings up to this order are compared as informational rows.
const LOCAL_ROW_MAX: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityRow {
    pub left: String,
    pub right: String,
    pub order: u64,
    pub reduced: bool,
    pub graphs_isomorphic: bool,
    /// Field-order multisets for reduced rows. Other rows are `Some(false)`
    /// when characteristic or unit count differ and `None` otherwise.
    pub rings_isomorphic: Option<bool>,
    pub reason: String,
    /// Edge-verified vertex mapping for graph-isomorphic pairs of
    /// non-isomorphic rings.
    pub certificate: Option<Certificate>,
}

struct Entry {
    spec: RingSpec,
    ring: Ring,
    digest: Vec<u8>,
}

fn entries(specs: Vec<RingSpec>) -> Result<Vec<Entry>> {
    specs
        .into_par_iter()
        .map(|spec| {
            let ring = Ring::new(&spec);
            let digest = canonical_form(&build_graph(&ring).graph.to_simple())?.bytes;
            Ok(Entry { spec, ring, digest })
        })
        .collect()
}

/// Ring isomorphism from field orders when both rings are reduced, otherwise
/// `Some(false)` only when order, reducedness, characteristic or unit count differ.
pub fn rings_isomorphic(a: &Ring, b: &Ring) -> (Option<bool>, String) {
    if a.order() != b.order() {
        return (Some(false), format!("order {} vs {}", a.order(), b.order()));
    }
    match (a.reduced_decomposition(), b.reduced_decomposition()) {
        (Ok(da), Ok(db)) => {
            let reason = format!("field orders {:?} vs {:?}", da.field_orders, db.field_orders);
            return (Some(da == db), reason);
        }
        (Ok(_), Err(_)) | (Err(_), Ok(_)) => return (Some(false), "reduced vs non-reduced".into()),
        _ => {}
    }
    let (ia, ib) = (a.invariants(), b.invariants());
    if ia.characteristic != ib.characteristic {
        let reason = format!("characteristic {} vs {}", ia.characteristic, ib.characteristic);
        (Some(false), reason)
    } else if ia.unit_count != ib.unit_count {
        (Some(false), format!("unit count {} vs {}", ia.unit_count, ib.unit_count))
    } else {
        (None, "order, characteristic and unit count agree".into())
    }
}

fn compare(entries: &[Entry], reduced: bool) -> Vec<RigidityRow> {
    let mut pairs = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.spec.order() == b.spec.order() {
                pairs.push((a, b));
            }
        }
    }
    pairs
        .par_iter()
        .map(|(a, b)| {
            let graphs_isomorphic = a.digest == b.digest;
            let (rings, reason) = rings_isomorphic(&a.ring, &b.ring);
            let certificate = if graphs_isomorphic && rings == Some(false) {
                let right = b.spec.to_string();
                let cert = graph_mapping(&a.ring, &b.ring, &right).expect("equal canonical forms");
                let Certificate::GraphIsomorphism { mapping, .. } = &cert else {
                    unreachable!()
                };
                assert!(verify_graph_isomorphism(&a.ring, &b.ring, mapping));
                Some(cert)
            } else {
                None
            };
            RigidityRow {
                left: a.spec.to_string(),
                right: b.spec.to_string(),
                order: a.spec.order(),
                reduced,
                graphs_isomorphic,
                rings_isomorphic: rings,
                reason,
                certificate,
            }
        })
        .collect()
}

/// Every pair of equal-order reduced rings (products of fields and
/// squarefree `Z/n`) up to `max_order`, followed by informational rows for
/// equal-order local non-fields of order at most 16.
pub fn rigidity_audit(max_order: u64) -> Result<Vec<RigidityRow>> {
    let mut reduced = enumerate_reduced_specs(max_order);
    reduced.extend(squarefree_zmod_specs(max_order));
    reduced.sort_by_key(RingSpec::order);
    let mut rows = compare(&entries(reduced)?, true);
    let local = local_catalog(max_order.min(LOCAL_ROW_MAX));
    rows.extend(compare(&entries(local)?, false));
    Ok(rows)
}
