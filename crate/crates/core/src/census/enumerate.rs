use crate::numtheory::{factorize, is_squarefree, prime_power};
use crate::ring::{ComponentSpec, RingSpec};

fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

fn multisets(qs: &[u64], start: usize, budget: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    for i in start..qs.len() {
        let q = qs[i];
        if q > budget {
            break;
        }
        cur.push(q);
        out.push(cur.clone());
        multisets(qs, i, budget / q, cur, out);
        cur.pop();
    }
}

/// Field-order multisets `q_1 <= ... <= q_k` with product at most `max_order`,
/// sorted by product and then lexicographically.
pub fn reduced_multisets(max_order: u64) -> Vec<Vec<u64>> {
    let qs = prime_powers(max_order);
    let mut out = Vec::new();
    multisets(&qs, 0, max_order, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        let pa: u64 = a.iter().product();
        let pb: u64 = b.iter().product();
        pa.cmp(&pb).then_with(|| a.cmp(b))
    });
    out
}

/// One `GF(q_1) x ... x GF(q_k)` per multiset of prime powers with product
/// at most `max_order`.
pub fn enumerate_reduced_specs(max_order: u64) -> Vec<RingSpec> {
    reduced_multisets(max_order)
        .iter()
        .map(|qs| RingSpec::galois_product(qs).expect("prime powers within the order cap"))
        .collect()
}

/// `Z/n` for squarefree composite `n`.
pub fn squarefree_zmod_specs(max_order: u64) -> Vec<RingSpec> {
    (6..=max_order)
        .filter(|&n| is_squarefree(n) && factorize(n).len() >= 2)
        .map(|n| RingSpec::zmod(n).unwrap())
        .collect()
}

/// Local non-fields `Z/p^k` and `GF(q)[t]/(t^m)` with `k, m >= 2`.
pub fn local_catalog(max_order: u64) -> Vec<RingSpec> {
    let mut out = Vec::new();
    for n in 4..=max_order {
        if let Some((_, k)) = prime_power(n) {
            if k >= 2 {
                out.push(RingSpec::zmod(n).unwrap());
            }
        }
    }
    for q in prime_powers(max_order) {
        let mut m = 2;
        while q.checked_pow(m).is_some_and(|o| o <= max_order) {
            let c = ComponentSpec::truncated_poly(q, m).unwrap();
            out.push(RingSpec::new(vec![c]).unwrap());
            m += 1;
        }
    }
    sort_specs(&mut out);
    out
}

/// The local catalog, `Z/n` for non-squarefree `n` that is not a prime power,
/// and every local catalog ring times one field.
pub fn nonreduced_catalog(max_order: u64) -> Vec<RingSpec> {
    let local = local_catalog(max_order);
    let mut out = local.clone();
    out.extend(
        (12..=max_order)
            .filter(|&n| !is_squarefree(n) && prime_power(n).is_none())
            .map(|n| RingSpec::zmod(n).unwrap()),
    );
    for l in &local {
        for q in prime_powers(max_order / l.order()) {
            let mut comps = l.components().to_vec();
            comps.push(RingSpec::galois_product(&[q]).unwrap().components()[0].clone());
            out.push(RingSpec::new(comps).unwrap());
        }
    }
    sort_specs(&mut out);
    out
}

fn sort_specs(specs: &mut Vec<RingSpec>) {
    specs.sort_by_cached_key(|s| (s.order(), s.to_string()));
    specs.dedup();
}

/// Reduced specs, squarefree composite `Z/n`, and the non-reduced catalog,
/// each family bounded separately, in order of ring order (stable by family).
pub fn census_specs(reduced_max: u64, nonreduced_max: u64) -> Vec<RingSpec> {
    let mut out = enumerate_reduced_specs(reduced_max);
    out.extend(squarefree_zmod_specs(reduced_max));
    out.extend(nonreduced_catalog(nonreduced_max));
    out.sort_by_key(RingSpec::order);
    out
}

/// Reduced specs plus the non-reduced catalog, all within `max_order`.
pub fn enumerate_test_rings(max_order: u64) -> Vec<RingSpec> {
    census_specs(max_order, max_order)
}
