use bzu_core::graph::build_graph;
use bzu_core::{ElementClass, Ring};
use proptest::prelude::*;
use proptest::sample::select;

const SPECS: [&str; 10] = [
    "Z/12",
    "Z/27",
    "GF(4)",
    "GF(9)",
    "GF(8) x Z/3",
    "GF(2)[t]/(t^3)",
    "GF(4)[t]/(t^2) x GF(2)",
    "GF(3)[t]/(t^2+1)",
    "Z/4 x GF(4) x Z/2",
    "GF(5)[x]/(x^2)",
];

fn ring_and_three() -> impl Strategy<Value = (Ring, usize, usize, usize)> {
    select(&SPECS[..]).prop_flat_map(|text| {
        let r = Ring::parse(text).unwrap();
        let n = r.order();
        (Just(r), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn ring_axioms((r, a, b, c) in ring_and_three()) {
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.zero()), a);
        prop_assert_eq!(r.mul(a, r.one()), a);
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        prop_assert_eq!(r.sub(r.add(a, b), b), a);
    }

    #[test]
    fn elements_round_trip((r, a, b, _) in ring_and_three()) {
        let (ea, eb) = (r.element(a), r.element(b));
        prop_assert_eq!(r.index_of(&ea).unwrap(), a);
        prop_assert_eq!(r.elem_add(&ea, &eb).unwrap(), r.element(r.add(a, b)));
        prop_assert_eq!(r.elem_mul(&ea, &eb).unwrap(), r.element(r.mul(a, b)));
    }

    #[test]
    fn classes_partition_the_ring((r, a, _, _) in ring_and_three()) {
        let class = r.classify(a);
        prop_assert_eq!(class == ElementClass::Zero, a == r.zero());
        prop_assert_eq!(class == ElementClass::Unit, r.has_inverse_by_scan(a));
        prop_assert_eq!(class == ElementClass::ZeroDivisorStar, a != r.zero() && r.annihilated_by_scan(a));
        prop_assert_eq!(r.is_unit(a), !r.is_zero_divisor(a));
    }

    #[test]
    fn edges_follow_the_sum_rule((r, a, b, _) in ring_and_three()) {
        let g = build_graph(&r);
        let (zs, us) = (&g.left_index, &g.right_index);
        prop_assert_eq!(zs.len() + us.len() + 1, r.order());
        if zs.is_empty() {
            prop_assert_eq!(g.edge_count(), 0);
            return Ok(());
        }
        let z = zs[a % zs.len()];
        let u = us[b % us.len()];
        let (l, rr) = (g.left_position(z).unwrap(), g.right_position(u).unwrap());
        prop_assert_eq!(g.graph.has_edge(l, rr), !r.is_unit(r.add(z, u)));
    }
}
