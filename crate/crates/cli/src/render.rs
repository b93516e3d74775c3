use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use bzu_core::analysis::{Diameter, Girth, PlanarityVerdict};
use bzu_core::census::{ClaimId, ClaimVerdict, RigidityRow, RingReport, Verdict};

use crate::document::{AutSummary, IsocheckReport};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_text(out: &mut dyn Write, r: &RingReport) -> Result<()> {
    let inv = &r.invariants;
    let s = &r.graph_summary;
    let st = &s.stats;
    writeln!(out, "ring: {}", r.spec_text)?;
    writeln!(
        out,
        "order {}, characteristic {}, units {}, nonzero zero-divisors {}",
        inv.order, inv.characteristic, inv.unit_count, inv.zstar_count
    )?;
    let decomposition = match &r.decomposition {
        Some(d) => format!("{:?}", d.field_orders),
        None => "-".into(),
    };
    writeln!(
        out,
        "field: {}, local: {}, reduced: {}, field orders: {decomposition}",
        yes(inv.is_field),
        yes(inv.is_local),
        yes(inv.is_reduced)
    )?;
    writeln!(
        out,
        "graph: {} + {} vertices, {} edges, components: {}",
        s.zstar_count, s.unit_count, s.edge_count, st.component_count
    )?;
    let diameter = match st.diameter {
        Diameter::Finite(d) => d.to_string(),
        Diameter::Infinite => "infinite".into(),
        Diameter::Degenerate => "-".into(),
    };
    let girth = match st.girth {
        Girth::Finite(g) => g.to_string(),
        Girth::Acyclic => "acyclic".into(),
    };
    writeln!(
        out,
        "diameter: {diameter}, girth: {girth}, chromatic: {}, clique: {}",
        st.chromatic, st.clique
    )?;
    writeln!(
        out,
        "complete bipartite: {}, forest: {}, K_{{3,3}} subgraph: {}, planar: {}",
        yes(st.is_complete_bipartite),
        yes(st.is_forest),
        yes(s.k33.is_some()),
        yes(s.planarity == PlanarityVerdict::Planar)
    )?;
    writeln!(
        out,
        "graph automorphisms: {} (part-preserving {})",
        r.aut.full_order, r.aut.part_preserving_order
    )?;
    if let Some(p) = &r.phi {
        writeln!(
            out,
            "ring automorphisms: {}, injective: {}, surjective: {}",
            p.ring_aut_order,
            yes(p.injective),
            yes(p.surjective)
        )?;
    }
    writeln!(out, "canonical digest: {}", r.canonical_form_digest)?;
    Ok(())
}

pub fn verdicts_text(out: &mut dyn Write, verdicts: &[ClaimVerdict]) -> Result<()> {
    let mut tally: BTreeMap<ClaimId, [usize; 3]> = BTreeMap::new();
    for v in verdicts {
        let slot = match v.verdict {
            Verdict::Holds => 0,
            Verdict::Fails => 1,
            Verdict::NotApplicable => 2,
        };
        tally.entry(v.claim_id).or_default()[slot] += 1;
        if v.verdict != Verdict::NotApplicable {
            writeln!(out, "{:<4} {:<6} {}: {}", v.claim_id, v.verdict, v.ring, v.detail)?;
        }
    }
    writeln!(out)?;
    writeln!(out, "claim  holds  fails  n/a  statement")?;
    for (id, [h, f, n]) in tally {
        writeln!(out, "{:<5} {h:>6} {f:>6} {n:>4}  {}", id, id.statement())?;
    }
    Ok(())
}

pub fn verdicts_csv(out: &mut dyn Write, verdicts: &[ClaimVerdict]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["ring", "claim", "verdict", "detail", "certificate"])?;
    for v in verdicts {
        let cert = match &v.certificate {
            Some(c) => serde_json::to_string(c)?,
            None => String::new(),
        };
        w.write_record([
            v.ring.as_str(),
            &v.claim_id.to_string(),
            &v.verdict.to_string(),
            &v.detail,
            &cert,
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn ring_iso(r: Option<bool>) -> &'static str {
    match r {
        Some(true) => "isomorphic",
        Some(false) => "distinct",
        None => "undecided",
    }
}

pub fn rigidity_text(out: &mut dyn Write, rows: &[RigidityRow]) -> Result<()> {
    for r in rows {
        writeln!(
            out,
            "{} | {}: graphs {}, rings {} ({}){}",
            r.left,
            r.right,
            if r.graphs_isomorphic { "isomorphic" } else { "distinct" },
            ring_iso(r.rings_isomorphic),
            r.reason,
            if r.reduced { "" } else { " [non-reduced]" }
        )?;
    }
    Ok(())
}

pub fn rigidity_csv(out: &mut dyn Write, rows: &[RigidityRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["left", "right", "order", "reduced", "graphs_isomorphic", "rings_isomorphic", "reason"])?;
    for r in rows {
        w.write_record([
            r.left.as_str(),
            &r.right,
            &r.order.to_string(),
            &r.reduced.to_string(),
            &r.graphs_isomorphic.to_string(),
            ring_iso(r.rings_isomorphic),
            &r.reason,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn isocheck_text(out: &mut dyn Write, r: &IsocheckReport) -> Result<()> {
    let graphs = if r.graphs_isomorphic { "graph-isomorphic" } else { "graph-distinct" };
    let rings = match r.rings_isomorphic {
        Some(true) => "ring-isomorphic",
        Some(false) => "ring-distinct",
        None => "ring isomorphism undecided",
    };
    writeln!(out, "{} vs {}: {graphs}, {rings} ({})", r.left, r.right, r.reason)?;
    if let Some(m) = &r.mapping {
        let pairs: Vec<String> = m.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
        writeln!(out, "mapping: {}", pairs.join(", "))?;
    }
    if let Some(c) = &r.self_check {
        writeln!(out, "relabeling self-check (seed {}): {}", c.seed, if c.passed { "passed" } else { "failed" })?;
    }
    Ok(())
}

pub fn aut_text(out: &mut dyn Write, a: &AutSummary) -> Result<()> {
    writeln!(out, "ring: {}", a.spec_text)?;
    match (a.ring_aut_order, a.ring_aut_method) {
        (Some(o), Some(m)) => writeln!(out, "ring automorphisms: {o} ({m:?})")?,
        _ => writeln!(out, "ring automorphisms: not computed")?,
    }
    writeln!(out, "graph automorphisms: {}", a.graph.full_order)?;
    writeln!(out, "part-preserving: {}", a.graph.part_preserving_order)?;
    writeln!(out, "generators: {}", a.graph.generators.len())?;
    if let Some(p) = &a.phi {
        writeln!(
            out,
            "ring-to-graph map: injective {}, surjective {}, isomorphism {}",
            yes(p.injective),
            yes(p.surjective),
            yes(p.iso)
        )?;
    }
    Ok(())
}
