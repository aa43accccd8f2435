use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::group::PermGroup;
use super::ops::{center, derived_subgroup};
use super::perm::Perm;

/// Isomorphism invariants used to tell groups apart across degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    /// Invariant factors d1 | d2 | … of G/[G,G]; empty when perfect.
    pub abelianization_invariants: Vec<u64>,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
}

pub fn fingerprint(g: &PermGroup) -> Fingerprint {
    let mut order_histogram = BTreeMap::new();
    for x in g.elements() {
        *order_histogram.entry(x.order()).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        center_order: center(g).order(),
        abelianization_invariants: abelianization(g),
        order_histogram,
    }
}

/// Invariant factors of G/[G,G].
pub fn abelianization(g: &PermGroup) -> Vec<u64> {
    let d = derived_subgroup(g);
    let mut coset_of: HashMap<Perm, usize> = HashMap::with_capacity(g.order());
    let mut reps: Vec<&Perm> = Vec::new();
    for x in g.elements() {
        if coset_of.contains_key(x) {
            continue;
        }
        for y in d.elements() {
            coset_of.insert(x.compose(y), reps.len());
        }
        reps.push(x);
    }
    let orders: Vec<u64> = reps
        .iter()
        .map(|r| {
            let mut k = 1u64;
            let mut pw = (*r).clone();
            while !d.contains(&pw) {
                pw = pw.compose(r);
                k += 1;
            }
            k
        })
        .collect();
    abelian_invariants(&orders)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of a finite abelian group given the orders of all of
/// its elements. For each prime p, `log_p #{x : x^(p^k) = 1}` counts the
/// cyclic p-factors of order at least p^k.
pub fn abelian_invariants(element_orders: &[u64]) -> Vec<u64> {
    let n = element_orders.len() as u64;
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for p in prime_factors(n) {
        let mut exps: Vec<u32> = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = element_orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let mut log = 0u32;
            let mut c = count;
            while c > 1 {
                c /= p;
                log += 1;
            }
            let at_least_k = log - prev_log;
            if at_least_k == 0 {
                break;
            }
            // at_least_k factors have exponent >= k
            if exps.len() < at_least_k as usize {
                exps.resize(at_least_k as usize, 0);
            }
            for e in exps.iter_mut().take(at_least_k as usize) {
                *e = k;
            }
            prev_log = log;
            k += 1;
        }
        per_prime.push((p, exps));
    }
    let len = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    // exps are sorted descending; the largest invariant factor collects the
    // largest prime power of every prime.
    let mut factors: Vec<u64> = (0..len)
        .map(|i| {
            per_prime
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}
