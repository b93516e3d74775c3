use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::RingReport;
use crate::analysis::{classify, Diameter, Girth, KuratowskiKind, PlanarityVerdict};
use crate::graph::{build_graph, BzuGraph, SimpleGraph};
use crate::numtheory::is_prime;
use crate::ring::{Element, Ring, RingSpec, DEFAULT_BRUTE_FORCE_CAP};
use crate::symmetry::{canonical_form, graph_aut, graphs_isomorphic, RingOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
}

impl ClaimId {
    pub const ALL: [ClaimId; 11] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::C1 => "a local ring that is not a field has an edgeless graph",
            ClaimId::C2 => "a reduced ring has an edgeless graph iff it is a field",
            ClaimId::C3 => "a reduced non-field has a connected graph of diameter at most 4",
            ClaimId::C4 => "the graph has girth 4 or no cycles",
            ClaimId::C5 => "chromatic and clique number are 2 iff the graph has an edge",
            ClaimId::C6 => "the graph is nonempty complete bipartite iff R is GF(2)^n with n >= 2",
            ClaimId::C7 => "the graph has no K_{3,3} subgraph",
            ClaimId::C8 => "the graph is planar",
            ClaimId::C9 => "reduced rings of equal order have isomorphic graphs iff the rings are isomorphic",
            ClaimId::C10 => "ring automorphisms map onto graph automorphisms iff R is GF(2), GF(2)^2 or GF(p) x GF(q)",
            ClaimId::C11 => "part sizes and single-support degrees follow the field orders",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{self:?}"))
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.to_string() == t)
            .ok_or_else(|| format!("unknown claim `{s}` (expected C1..C11)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// Evidence for a FAILS verdict, stated in ring elements so that it can be
/// checked with ring arithmetic alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Edge {
        zero_divisor: Element,
        unit: Element,
    },
    NonEdge {
        zero_divisor: Element,
        unit: Element,
    },
    Counts {
        zstar_count: u64,
        unit_count: u64,
        edge_count: u64,
    },
    /// Breadth-first layers from `source`, ending at `target` or exhausting
    /// the component of `source` without reaching it.
    Bfs {
        source: Element,
        target: Element,
        layers: Vec<Vec<Element>>,
    },
    Cycle {
        vertices: Vec<Element>,
    },
    K33 {
        zero_divisors: Vec<Element>,
        units: Vec<Element>,
    },
    Kuratowski {
        subdivision_of: KuratowskiKind,
        branch_vertices: Vec<Element>,
        edges: Vec<(Element, Element)>,
    },
    PartSizes {
        zstar_count: u64,
        unit_count: u64,
        predicted_zstar_count: u64,
        predicted_unit_count: u64,
    },
    Degree {
        element: Element,
        degree: u64,
        predicted: u64,
    },
    GraphIsomorphism {
        other: String,
        mapping: Vec<(Element, Element)>,
    },
    DistinctGraphs {
        other: String,
    },
    /// A part-preserving graph automorphism whose extension by `0 -> 0`
    /// breaks `op` on `(a, b)`.
    NonImage {
        mapping: Vec<(Element, Element)>,
        a: Element,
        b: Element,
        op: RingOp,
    },
    AutOrders {
        ring_aut_order: u64,
        #[serde(with = "crate::symmetry::decimal")]
        graph_aut_order: BigUint,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim_id: ClaimId,
    /// Spec text, or `A | B` for pairwise claims.
    pub ring: String,
    pub verdict: Verdict,
    pub detail: String,
    pub certificate: Option<Certificate>,
}

/// Ring arithmetic with unit status recomputed by inverse scans.
struct Raw<'a> {
    ring: &'a Ring,
    unit: Vec<bool>,
}

impl<'a> Raw<'a> {
    fn new(ring: &'a Ring) -> Self {
        Raw {
            ring,
            unit: ring.unit_table_by_scan(),
        }
    }

    fn n(&self) -> usize {
        self.ring.order()
    }

    fn index(&self, e: &Element) -> Option<usize> {
        self.ring.index_of(e).ok()
    }

    fn zstar(&self, x: usize) -> bool {
        x != 0 && !self.unit[x]
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        ((self.zstar(x) && self.unit[y]) || (self.unit[x] && self.zstar(y))) && !self.unit[self.ring.add(x, y)]
    }

    fn edge(&self, z: usize, u: usize) -> bool {
        self.zstar(z) && self.unit[u] && self.adjacent(z, u)
    }

    fn counts(&self) -> (u64, u64, u64) {
        let units: Vec<usize> = (1..self.n()).filter(|&x| self.unit[x]).collect();
        let zs: Vec<usize> = (1..self.n()).filter(|&x| self.zstar(x)).collect();
        let edges = zs
            .iter()
            .map(|&z| units.iter().filter(|&&u| self.adjacent(z, u)).count() as u64)
            .sum();
        (zs.len() as u64, units.len() as u64, edges)
    }

    fn is_field(&self) -> bool {
        (1..self.n()).all(|x| self.unit[x])
    }

    fn is_local(&self) -> bool {
        let non_units: Vec<usize> = (0..self.n()).filter(|&x| !self.unit[x]).collect();
        non_units
            .iter()
            .all(|&a| non_units.iter().all(|&b| !self.unit[self.ring.add(a, b)]))
    }

    fn is_reduced(&self) -> bool {
        (1..self.n()).all(|x| {
            let mut y = x;
            for _ in 0..self.n() {
                y = self.ring.mul(y, x);
                if y == 0 {
                    return false;
                }
            }
            true
        })
    }

    fn is_boolean(&self) -> bool {
        (0..self.n()).all(|x| self.ring.mul(x, x) == x)
    }

    /// Primitive idempotents with the orders of the fields `R e`, or `None`
    /// for a non-reduced ring.
    fn field_factors(&self) -> Option<Vec<(usize, u64)>> {
        if !self.is_reduced() {
            return None;
        }
        let idem: Vec<usize> = (1..self.n()).filter(|&x| self.ring.mul(x, x) == x).collect();
        let mut out: Vec<(usize, u64)> = idem
            .iter()
            .filter(|&&e| !idem.iter().any(|&f| f != e && self.ring.mul(e, f) == f))
            .map(|&e| {
                let ideal: BTreeSet<usize> = (0..self.n()).map(|x| self.ring.mul(x, e)).collect();
                (e, ideal.len() as u64)
            })
            .collect();
        out.sort_by_key(|&(e, q)| (q, e));
        Some(out)
    }

    fn field_orders(&self) -> Option<Vec<u64>> {
        self.field_factors().map(|f| f.into_iter().map(|(_, q)| q).collect())
    }

    fn degree(&self, x: usize) -> u64 {
        (1..self.n()).filter(|&y| self.adjacent(x, y)).count() as u64
    }

    /// B(R) with left part Z(R)* and right part U(R), both in index order.
    fn simple_graph(&self) -> (SimpleGraph, Vec<usize>) {
        let mut verts: Vec<usize> = (1..self.n()).filter(|&x| self.zstar(x)).collect();
        verts.extend((1..self.n()).filter(|&x| self.unit[x]));
        let mut edges = Vec::new();
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(x, y) {
                    edges.push((i, j));
                }
            }
        }
        (SimpleGraph::from_edges(verts.len(), edges), verts)
    }

    fn no_four_cycle(&self) -> bool {
        let nbrs: Vec<Vec<bool>> = (0..self.n())
            .map(|x| (0..self.n()).map(|y| self.adjacent(x, y)).collect())
            .collect();
        (1..self.n()).all(|x| {
            (x + 1..self.n()).all(|y| {
                self.unit[x] != self.unit[y] || (1..self.n()).filter(|&w| nbrs[x][w] && nbrs[y][w]).count() <= 1
            })
        })
    }

    fn mapping(&self, other: &Raw, pairs: &[(Element, Element)]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n()];
        let mut hit = vec![false; other.n()];
        for (a, b) in pairs {
            let (x, y) = (self.index(a)?, other.index(b)?);
            if x == 0 || y == 0 || map[x] != usize::MAX || hit[y] {
                return None;
            }
            map[x] = y;
            hit[y] = true;
        }
        (pairs.len() == self.n() - 1 && self.n() == other.n()).then_some(map)
    }

    fn preserves_adjacency(&self, other: &Raw, map: &[usize]) -> bool {
        (1..self.n()).all(|x| (x + 1..self.n()).all(|y| self.adjacent(x, y) == other.adjacent(map[x], map[y])))
    }
}

/// Whether a reduced ring with these field orders is GF(2), GF(2)^2 or
/// GF(p) x GF(q) for distinct primes.
fn phi_iso_predicted(field_orders: &[u64]) -> bool {
    match field_orders {
        [2] | [2, 2] => true,
        [p, q] => p != q && is_prime(*p) && is_prime(*q),
        _ => false,
    }
}

/// Checks a FAILS certificate against `ring` using ring arithmetic only.
pub fn verify_claim_certificate(ring: &Ring, claim: ClaimId, cert: &Certificate) -> bool {
    let raw = Raw::new(ring);
    let idx = |e: &Element| raw.index(e);
    match (claim, cert) {
        (ClaimId::C1, Certificate::Edge { zero_divisor, unit }) => {
            raw.is_local()
                && !raw.is_field()
                && matches!((idx(zero_divisor), idx(unit)), (Some(z), Some(u)) if raw.edge(z, u))
        }
        (ClaimId::C2, Certificate::Counts { zstar_count, unit_count, edge_count }) => {
            raw.is_reduced()
                && !raw.is_field()
                && *edge_count == 0
                && raw.counts() == (*zstar_count, *unit_count, *edge_count)
        }
        (ClaimId::C3, Certificate::Bfs { source, target, layers }) => {
            raw.is_reduced() && !raw.is_field() && verify_bfs(&raw, source, target, layers)
        }
        (ClaimId::C4, Certificate::Cycle { vertices }) => {
            let Some(c) = vertices.iter().map(idx).collect::<Option<Vec<usize>>>() else {
                return false;
            };
            let distinct = c.iter().collect::<BTreeSet<_>>().len() == c.len();
            c.len() >= 3
                && c.len() != 4
                && distinct
                && (0..c.len()).all(|i| raw.adjacent(c[i], c[(i + 1) % c.len()]))
                && raw.no_four_cycle()
        }
        (ClaimId::C6, Certificate::Counts { zstar_count, unit_count, edge_count }) => {
            !raw.is_boolean()
                && *zstar_count > 0
                && *unit_count > 0
                && *edge_count == zstar_count * unit_count
                && raw.counts() == (*zstar_count, *unit_count, *edge_count)
        }
        (ClaimId::C6, Certificate::NonEdge { zero_divisor, unit }) => {
            raw.is_boolean()
                && raw.n() >= 4
                && matches!((idx(zero_divisor), idx(unit)), (Some(z), Some(u))
                    if raw.zstar(z) && raw.unit[u] && !raw.adjacent(z, u))
        }
        (ClaimId::C7 | ClaimId::C8, Certificate::K33 { zero_divisors, units }) => {
            let zs: Option<BTreeSet<usize>> = zero_divisors.iter().map(idx).collect();
            let us: Option<BTreeSet<usize>> = units.iter().map(idx).collect();
            match (zs, us) {
                (Some(zs), Some(us)) => {
                    zs.len() == 3 && us.len() == 3 && zs.iter().all(|&z| us.iter().all(|&u| raw.edge(z, u)))
                }
                _ => false,
            }
        }
        (
            ClaimId::C8,
            Certificate::Kuratowski {
                subdivision_of,
                branch_vertices,
                edges,
            },
        ) => {
            let Some(es) = edges
                .iter()
                .map(|(a, b)| Some((idx(a)?, idx(b)?)))
                .collect::<Option<Vec<(usize, usize)>>>()
            else {
                return false;
            };
            let Some(branch) = branch_vertices.iter().map(idx).collect::<Option<BTreeSet<usize>>>() else {
                return false;
            };
            es.iter().all(|&(a, b)| raw.adjacent(a, b))
                && classify(&es).is_some_and(|s| {
                    s.kind == *subdivision_of && s.branch_vertices.iter().copied().collect::<BTreeSet<_>>() == branch
                })
        }
        (ClaimId::C9, Certificate::GraphIsomorphism { other, mapping }) => {
            let Ok(s) = Ring::parse(other) else { return false };
            let (fr, fs) = (raw.field_orders(), Raw::new(&s).field_orders());
            fr.is_some() && fs.is_some() && fr != fs && verify_graph_isomorphism(ring, &s, mapping)
        }
        (ClaimId::C9, Certificate::DistinctGraphs { other }) => {
            let Ok(s) = Ring::parse(other) else { return false };
            let raw_s = Raw::new(&s);
            let fr = raw.field_orders();
            fr.is_some() && fr == raw_s.field_orders() && {
                let (g1, _) = raw.simple_graph();
                let (g2, _) = raw_s.simple_graph();
                matches!((canonical_form(&g1), canonical_form(&g2)), (Ok(c1), Ok(c2)) if c1.bytes != c2.bytes)
            }
        }
        (ClaimId::C10, Certificate::NonImage { mapping, a, b, op }) => {
            let predicted = raw.field_orders().is_some_and(|f| phi_iso_predicted(&f));
            let Some(mut m) = raw.mapping(&raw, mapping) else { return false };
            m[0] = 0;
            let (Some(a), Some(b)) = (idx(a), idx(b)) else { return false };
            let breaks = match op {
                RingOp::Add => m[ring.add(a, b)] != ring.add(m[a], m[b]),
                RingOp::Mul => m[ring.mul(a, b)] != ring.mul(m[a], m[b]),
            };
            predicted
                && (1..raw.n()).all(|x| raw.unit[x] == raw.unit[m[x]])
                && raw.preserves_adjacency(&raw, &m)
                && breaks
        }
        (ClaimId::C10, Certificate::AutOrders { ring_aut_order, graph_aut_order }) => {
            let predicted = raw.field_orders().is_some_and(|f| phi_iso_predicted(&f));
            let (g, verts) = raw.simple_graph();
            let l = verts.iter().filter(|&&x| raw.zstar(x)).count();
            let b = crate::graph::Bipartite::from_edges(
                l,
                verts.len() - l,
                g.edges().into_iter().map(|(x, y)| (x, y - l)),
            );
            match (ring.aut_group(DEFAULT_BRUTE_FORCE_CAP), graph_aut(&b)) {
                (Ok(ra), Ok(ga)) => {
                    ra.order == *ring_aut_order
                        && ga.part_preserving_order == *graph_aut_order
                        && (BigUint::from(ra.order) == ga.part_preserving_order) != predicted
                }
                _ => false,
            }
        }
        (
            ClaimId::C11,
            Certificate::PartSizes {
                zstar_count,
                unit_count,
                predicted_zstar_count,
                predicted_unit_count,
            },
        ) => {
            let Some(qs) = raw.field_orders() else { return false };
            let order: u64 = qs.iter().product();
            let units: u64 = qs.iter().map(|q| q - 1).product();
            let (z, u, _) = raw.counts();
            (z, u) == (*zstar_count, *unit_count)
                && (order - units - 1, units) == (*predicted_zstar_count, *predicted_unit_count)
                && (z, u) != (order - units - 1, units)
        }
        (ClaimId::C11, Certificate::Degree { element, degree, predicted }) => {
            let (Some(x), Some(factors)) = (idx(element), raw.field_factors()) else {
                return false;
            };
            let Some(i) = factors.iter().position(|&(e, _)| ring.mul(x, e) == x) else {
                return false;
            };
            let expect: u64 = factors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &(_, q))| q - 1)
                .product();
            x != 0 && raw.degree(x) == *degree && expect == *predicted && degree != predicted
        }
        _ => false,
    }
}

/// `mapping` is a bijection between the nonzero elements of `r` and `s`
/// that preserves adjacency in both directions.
pub fn verify_graph_isomorphism(r: &Ring, s: &Ring, mapping: &[(Element, Element)]) -> bool {
    let (raw_r, raw_s) = (Raw::new(r), Raw::new(s));
    raw_r
        .mapping(&raw_s, mapping)
        .is_some_and(|m| raw_r.preserves_adjacency(&raw_s, &m))
}

fn verify_bfs(raw: &Raw, source: &Element, target: &Element, layers: &[Vec<Element>]) -> bool {
    let (Some(s), Some(t)) = (raw.index(source), raw.index(target)) else {
        return false;
    };
    let Some(layers) = layers
        .iter()
        .map(|l| l.iter().map(|e| raw.index(e)).collect::<Option<BTreeSet<usize>>>())
        .collect::<Option<Vec<_>>>()
    else {
        return false;
    };
    if s == 0 || t == 0 || s == t || layers.first() != Some(&BTreeSet::from([s])) {
        return false;
    }
    let mut seen: BTreeSet<usize> = BTreeSet::from([s]);
    let next_layer = |layer: &BTreeSet<usize>, seen: &BTreeSet<usize>| -> BTreeSet<usize> {
        layer
            .iter()
            .flat_map(|&x| (1..raw.n()).filter(move |&y| raw.adjacent(x, y)))
            .filter(|y| !seen.contains(y))
            .collect()
    };
    for i in 0..layers.len() - 1 {
        let next = next_layer(&layers[i], &seen);
        if next != layers[i + 1] {
            return false;
        }
        seen.extend(next);
    }
    let last = layers.last().unwrap();
    if last.contains(&t) {
        layers.len() > 5
    } else {
        next_layer(last, &seen).is_empty() && !seen.contains(&t)
    }
}

fn fails(claim_id: ClaimId, report: &RingReport, ring: &Ring, detail: String, cert: Certificate) -> ClaimVerdict {
    assert!(
        verify_claim_certificate(ring, claim_id, &cert),
        "{claim_id} certificate for {} does not verify",
        report.spec_text
    );
    ClaimVerdict {
        claim_id,
        ring: report.spec_text.clone(),
        verdict: Verdict::Fails,
        detail,
        certificate: Some(cert),
    }
}

fn plain(claim_id: ClaimId, report: &RingReport, verdict: Verdict, detail: String) -> ClaimVerdict {
    ClaimVerdict {
        claim_id,
        ring: report.spec_text.clone(),
        verdict,
        detail,
        certificate: None,
    }
}

fn holds_or_na(applicable: bool) -> Verdict {
    if applicable {
        Verdict::Holds
    } else {
        Verdict::NotApplicable
    }
}

struct Ctx<'a> {
    report: &'a RingReport,
    ring: Ring,
    g: BzuGraph,
}

impl Ctx<'_> {
    fn elem(&self, v: usize) -> Element {
        self.ring.element(self.g.ring_index(v))
    }

    fn left(&self, l: usize) -> Element {
        self.ring.element(self.g.left_index[l])
    }

    fn right(&self, r: usize) -> Element {
        self.ring.element(self.g.right_index[r])
    }

    fn label(&self, v: usize) -> String {
        self.ring.label(self.g.ring_index(v))
    }

    fn counts(&self) -> Certificate {
        let s = &self.report.graph_summary;
        Certificate::Counts {
            zstar_count: s.zstar_count as u64,
            unit_count: s.unit_count as u64,
            edge_count: s.edge_count as u64,
        }
    }

    fn fails(&self, id: ClaimId, detail: String, cert: Certificate) -> ClaimVerdict {
        fails(id, self.report, &self.ring, detail, cert)
    }

    fn plain(&self, id: ClaimId, verdict: Verdict, detail: String) -> ClaimVerdict {
        plain(id, self.report, verdict, detail)
    }
}

fn describe_diameter(d: Diameter) -> String {
    match d {
        Diameter::Finite(d) => format!("diameter {d}"),
        Diameter::Infinite => "disconnected".into(),
        Diameter::Degenerate => "at most one vertex".into(),
    }
}

fn describe_girth(g: Girth) -> String {
    match g {
        Girth::Finite(g) => format!("girth {g}"),
        Girth::Acyclic => "acyclic".into(),
    }
}

fn c1(cx: &Ctx) -> ClaimVerdict {
    let inv = &cx.report.invariants;
    let edges = cx.report.graph_summary.edge_count;
    let applicable = inv.is_local && !inv.is_field;
    if applicable && edges > 0 {
        let (l, r) = cx.g.graph.edges()[0];
        let detail = format!("{edges} edges, e.g. {} ~ {}", cx.label(l), cx.label(cx.g.left_index.len() + r));
        return cx.fails(
            ClaimId::C1,
            detail,
            Certificate::Edge {
                zero_divisor: cx.left(l),
                unit: cx.right(r),
            },
        );
    }
    cx.plain(ClaimId::C1, holds_or_na(applicable), format!("{edges} edges"))
}

fn c2(cx: &Ctx) -> ClaimVerdict {
    let inv = &cx.report.invariants;
    let edgeless = cx.report.graph_summary.edge_count == 0;
    let detail = format!(
        "{}, {}",
        if edgeless { "edgeless" } else { "has edges" },
        if inv.is_field { "field" } else { "not a field" }
    );
    if inv.is_reduced && edgeless && !inv.is_field {
        return cx.fails(ClaimId::C2, detail, cx.counts());
    }
    cx.plain(ClaimId::C2, holds_or_na(inv.is_reduced), detail)
}

fn bfs_layers(g: &SimpleGraph, s: usize) -> Vec<Vec<usize>> {
    let dist = g.bfs(s);
    let depth = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].push(v);
        }
    }
    layers
}

fn c3(cx: &Ctx) -> ClaimVerdict {
    let inv = &cx.report.invariants;
    let stats = &cx.report.graph_summary.stats;
    let applicable = inv.is_reduced && !inv.is_field;
    let detail = describe_diameter(stats.diameter);
    let ok = stats.is_connected && matches!(stats.diameter, Diameter::Finite(d) if d <= 4);
    if !applicable || ok {
        return cx.plain(ClaimId::C3, holds_or_na(applicable), detail);
    }
    let g = cx.g.graph.to_simple();
    let (source, target, mut layers) = (0..g.vertex_count())
        .find_map(|s| {
            let dist = g.bfs(s);
            let layers = bfs_layers(&g, s);
            if let Some(t) = dist.iter().position(Option::is_none) {
                return Some((s, t, layers));
            }
            if layers.len() > 5 {
                let t = layers[layers.len() - 1][0];
                return Some((s, t, layers));
            }
            None
        })
        .expect("a violating pair exists");
    if let Some(pos) = layers.iter().position(|l| l.contains(&target)) {
        layers.truncate(pos + 1);
    }
    let cert = Certificate::Bfs {
        source: cx.elem(source),
        target: cx.elem(target),
        layers: layers.iter().map(|l| l.iter().map(|&v| cx.elem(v)).collect()).collect(),
    };
    let detail = format!("{detail}; {} to {}", cx.label(source), cx.label(target));
    cx.fails(ClaimId::C3, detail, cert)
}

fn c4(cx: &Ctx) -> ClaimVerdict {
    let stats = &cx.report.graph_summary.stats;
    let detail = describe_girth(stats.girth);
    let ok = matches!(stats.girth, Girth::Acyclic | Girth::Finite(4));
    if !ok {
        let cycle = stats.girth_cycle.as_ref().expect("finite girth has a witness");
        let labels: Vec<String> = cycle.iter().map(|&v| cx.label(v)).collect();
        let cert = Certificate::Cycle {
            vertices: cycle.iter().map(|&v| cx.elem(v)).collect(),
        };
        return cx.fails(ClaimId::C4, format!("{detail}: {}", labels.join(" - ")), cert);
    }
    cx.plain(ClaimId::C4, Verdict::Holds, detail)
}

fn c5(cx: &Ctx) -> ClaimVerdict {
    let s = &cx.report.graph_summary;
    let detail = format!("chromatic {}, clique {}", s.stats.chromatic, s.stats.clique);
    let ok = if s.edge_count > 0 {
        s.stats.chromatic == 2 && s.stats.clique == 2
    } else {
        s.stats.chromatic <= 1 && s.stats.clique <= 1
    };
    if !ok {
        return cx.fails(ClaimId::C5, detail, cx.counts());
    }
    cx.plain(ClaimId::C5, Verdict::Holds, detail)
}

fn c6(cx: &Ctx) -> ClaimVerdict {
    let s = &cx.report.graph_summary;
    let complete = s.stats.is_complete_bipartite && s.edge_count > 0;
    let boolean = cx
        .report
        .decomposition
        .as_ref()
        .is_some_and(|d| d.field_orders.len() >= 2 && d.field_orders.iter().all(|&q| q == 2));
    let detail = format!(
        "{} (K_{{{},{}}} has {} edges), {}",
        if complete { "complete bipartite" } else { "not complete bipartite" },
        s.zstar_count,
        s.unit_count,
        s.edge_count,
        if boolean { "GF(2)^n" } else { "not GF(2)^n" }
    );
    if complete && !boolean {
        return cx.fails(ClaimId::C6, detail, cx.counts());
    }
    if boolean && !complete {
        let (l, r) = (0..s.zstar_count)
            .flat_map(|l| (0..s.unit_count).map(move |r| (l, r)))
            .find(|&(l, r)| !cx.g.graph.has_edge(l, r))
            .expect("a missing edge");
        let cert = Certificate::NonEdge {
            zero_divisor: cx.left(l),
            unit: cx.right(r),
        };
        return cx.fails(ClaimId::C6, detail, cert);
    }
    cx.plain(ClaimId::C6, Verdict::Holds, detail)
}

fn k33_certificate(cx: &Ctx) -> Option<(String, Certificate)> {
    let w = cx.report.graph_summary.k33?;
    let l = cx.g.left_index.len();
    let zs: Vec<String> = w.left_triple.iter().map(|&v| cx.label(v)).collect();
    let us: Vec<String> = w.right_triple.iter().map(|&v| cx.label(l + v)).collect();
    Some((
        format!("K_{{3,3}} on {{{}}} x {{{}}}", zs.join(", "), us.join(", ")),
        Certificate::K33 {
            zero_divisors: w.left_triple.iter().map(|&v| cx.left(v)).collect(),
            units: w.right_triple.iter().map(|&v| cx.right(v)).collect(),
        },
    ))
}

fn c7(cx: &Ctx) -> ClaimVerdict {
    match k33_certificate(cx) {
        Some((detail, cert)) => cx.fails(ClaimId::C7, detail, cert),
        None => cx.plain(ClaimId::C7, Verdict::Holds, "no K_{3,3}".into()),
    }
}

fn c8(cx: &Ctx) -> ClaimVerdict {
    let s = &cx.report.graph_summary;
    if s.planarity == PlanarityVerdict::Planar {
        return cx.plain(ClaimId::C8, Verdict::Holds, "planar".into());
    }
    if let Some((detail, cert)) = k33_certificate(cx) {
        return cx.fails(ClaimId::C8, format!("non-planar: {detail}"), cert);
    }
    let sub = s.kuratowski.as_ref().expect("non-planar graphs carry a subdivision");
    let kind = match sub.kind {
        KuratowskiKind::K5 => "K5",
        KuratowskiKind::K33 => "K_{3,3}",
    };
    let cert = Certificate::Kuratowski {
        subdivision_of: sub.kind,
        branch_vertices: sub.branch_vertices.iter().map(|&v| cx.elem(v)).collect(),
        edges: sub.edges.iter().map(|&(a, b)| (cx.elem(a), cx.elem(b))).collect(),
    };
    let detail = format!("non-planar: subdivision of {kind} with {} edges", sub.edges.len());
    cx.fails(ClaimId::C8, detail, cert)
}

fn c10(cx: &Ctx) -> ClaimVerdict {
    let Some(phi) = &cx.report.phi else {
        return cx.plain(
            ClaimId::C10,
            Verdict::NotApplicable,
            "automorphism comparison not computed".into(),
        );
    };
    let predicted = cx
        .report
        .decomposition
        .as_ref()
        .is_some_and(|d| phi_iso_predicted(&d.field_orders));
    let detail = format!(
        "ring automorphisms {}, part-preserving graph automorphisms {}, isomorphism {}, predicted {}",
        phi.ring_aut_order, phi.graph_aut_order, phi.iso, predicted
    );
    if phi.iso == predicted {
        return cx.plain(ClaimId::C10, Verdict::Holds, detail);
    }
    let cert = match &phi.non_image_witness {
        Some(w) if predicted => {
            let n = cx.g.graph.vertex_count();
            let map = w.permutation.to_map(n);
            Certificate::NonImage {
                mapping: (0..n).map(|v| (cx.elem(v), cx.elem(map[v]))).collect(),
                a: cx.ring.element(w.a),
                b: cx.ring.element(w.b),
                op: w.op,
            }
        }
        _ => Certificate::AutOrders {
            ring_aut_order: phi.ring_aut_order,
            graph_aut_order: phi.graph_aut_order.clone(),
        },
    };
    cx.fails(ClaimId::C10, detail, cert)
}

fn c11(cx: &Ctx) -> ClaimVerdict {
    let Some(d) = &cx.report.decomposition else {
        return cx.plain(ClaimId::C11, Verdict::NotApplicable, "not reduced".into());
    };
    let inv = &cx.report.invariants;
    let qs = &d.field_orders;
    let order: u64 = qs.iter().product();
    let units: u64 = qs.iter().map(|q| q - 1).product();
    let zstar = order - units - 1;
    if (inv.zstar_count, inv.unit_count) != (zstar, units) {
        let detail = format!(
            "|Z*| = {}, |U| = {}; predicted {zstar}, {units}",
            inv.zstar_count, inv.unit_count
        );
        let cert = Certificate::PartSizes {
            zstar_count: inv.zstar_count,
            unit_count: inv.unit_count,
            predicted_zstar_count: zstar,
            predicted_unit_count: units,
        };
        return cx.fails(ClaimId::C11, detail, cert);
    }
    let raw = Raw::new(&cx.ring);
    let factors = raw.field_factors().expect("reduced");
    assert_eq!(factors.iter().map(|&(_, q)| q).collect::<Vec<_>>(), *qs);
    let mut degrees = BTreeSet::new();
    if factors.len() >= 2 {
        for (i, &(e, _)) in factors.iter().enumerate() {
            let predicted: u64 = factors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &(_, q))| q - 1)
                .product();
            let support: BTreeSet<usize> = (1..raw.n()).map(|x| cx.ring.mul(x, e)).filter(|&x| x != 0).collect();
            for x in support {
                let degree = raw.degree(x);
                if degree != predicted {
                    let detail = format!("deg {} = {degree}, predicted {predicted}", cx.ring.label(x));
                    let cert = Certificate::Degree {
                        element: cx.ring.element(x),
                        degree,
                        predicted,
                    };
                    return cx.fails(ClaimId::C11, detail, cert);
                }
                degrees.insert(degree);
            }
        }
    }
    let degrees: Vec<String> = degrees.iter().map(u64::to_string).collect();
    let detail = format!(
        "|Z*| = {zstar}, |U| = {units}, single-support degrees {{{}}}",
        degrees.join(", ")
    );
    cx.plain(ClaimId::C11, Verdict::Holds, detail)
}

fn per_ring(report: &RingReport) -> Vec<ClaimVerdict> {
    let spec = RingSpec::parse(&report.spec_text).expect("report spec text parses");
    let ring = Ring::new(&spec);
    let g = build_graph(&ring);
    let cx = Ctx { report, ring, g };
    vec![c1(&cx), c2(&cx), c3(&cx), c4(&cx), c5(&cx), c6(&cx), c7(&cx), c8(&cx), c10(&cx), c11(&cx)]
}

/// C9 over every pair of reduced reports of equal order.
fn pair_verdicts(reports: &[RingReport]) -> Vec<ClaimVerdict> {
    let reduced: Vec<&RingReport> = reports.iter().filter(|r| r.decomposition.is_some()).collect();
    let mut pairs = Vec::new();
    for (i, a) in reduced.iter().enumerate() {
        for b in &reduced[i + 1..] {
            if a.invariants.order == b.invariants.order {
                pairs.push((*a, *b));
            }
        }
    }
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let graphs = a.canonical_form_digest == b.canonical_form_digest;
            let rings = a.decomposition == b.decomposition;
            let subject = format!("{} | {}", a.spec_text, b.spec_text);
            let detail = format!(
                "graphs {}isomorphic, rings {}isomorphic",
                if graphs { "" } else { "non-" },
                if rings { "" } else { "non-" }
            );
            if graphs == rings {
                return ClaimVerdict {
                    claim_id: ClaimId::C9,
                    ring: subject,
                    verdict: Verdict::Holds,
                    detail,
                    certificate: None,
                };
            }
            let ra = Ring::parse(&a.spec_text).unwrap();
            let cert = if graphs {
                graph_mapping(&ra, &Ring::parse(&b.spec_text).unwrap(), &b.spec_text)
                    .expect("equal canonical forms")
            } else {
                Certificate::DistinctGraphs {
                    other: b.spec_text.clone(),
                }
            };
            assert!(verify_claim_certificate(&ra, ClaimId::C9, &cert), "C9 certificate for {subject}");
            ClaimVerdict {
                claim_id: ClaimId::C9,
                ring: subject,
                verdict: Verdict::Fails,
                detail,
                certificate: Some(cert),
            }
        })
        .collect()
}

/// A graph isomorphism B(R) -> B(S) as element pairs, if one exists.
pub fn graph_mapping(r: &Ring, s: &Ring, other: &str) -> Option<Certificate> {
    let (gr, gs) = (build_graph(r), build_graph(s));
    let map = graphs_isomorphic(&gr.graph.to_simple(), &gs.graph.to_simple()).ok()??;
    Some(Certificate::GraphIsomorphism {
        other: other.to_string(),
        mapping: map
            .iter()
            .enumerate()
            .map(|(v, &w)| (r.element(gr.ring_index(v)), s.element(gs.ring_index(w))))
            .collect(),
    })
}

/// Verdicts for every report and claim, then the pairwise C9 verdicts; every
/// FAILS certificate is re-checked before it is returned.
pub fn claim_audit(reports: &[RingReport]) -> Vec<ClaimVerdict> {
    let per: Vec<Vec<ClaimVerdict>> = reports.par_iter().map(per_ring).collect();
    let mut out: Vec<ClaimVerdict> = per.into_iter().flatten().collect();
    out.extend(pair_verdicts(reports));
    out
}
