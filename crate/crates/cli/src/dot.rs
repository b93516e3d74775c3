use std::fmt::Write;

use bzu_core::graph::BzuGraph;
use bzu_core::ring::Ring;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT for B(R): zero-divisors `z*` as boxes, units `u*` as ellipses, in
/// canonical element order.
pub fn export_dot(ring: &Ring, g: &BzuGraph) -> String {
    let mut out = String::new();
    writeln!(out, "// B({})", ring.spec()).unwrap();
    for (field, modulus) in ring.modulus_notes() {
        writeln!(out, "// {field} elements are polynomials in a modulo {modulus}").unwrap();
    }
    out.push_str("graph bzu {\n");
    for (i, &x) in g.left_index.iter().enumerate() {
        writeln!(out, "  z{i} [shape=box, label={}];", quote(&ring.label(x))).unwrap();
    }
    for (i, &x) in g.right_index.iter().enumerate() {
        writeln!(out, "  u{i} [shape=ellipse, label={}];", quote(&ring.label(x))).unwrap();
    }
    for (l, r) in g.graph.edges() {
        writeln!(out, "  z{l} -- u{r};").unwrap();
    }
    out.push_str("}\n");
    out
}
