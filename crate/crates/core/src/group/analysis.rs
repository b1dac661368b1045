use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use super::closure::{bfs, extend};
use super::rep::GroupRep;

/// Terms of the derived series and what they imply.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DerivedInfo {
    /// Orders of G, G', G'', ... until the series stabilizes.
    pub series: Vec<u64>,
    pub perfect: bool,
    pub solvable: bool,
    /// Length of the derived series when solvable.
    pub derived_length: Option<usize>,
}

/// Normal closure of `seeds` in the group generated by `ambient`, as a set
/// together with a generating list.
pub fn normal_closure<R: GroupRep>(
    rep: &R,
    ambient: &[R::Elem],
    seeds: &[R::Elem],
) -> (FxHashSet<R::Elem>, Vec<R::Elem>) {
    let mut gens: Vec<R::Elem> = Vec::new();
    let mut h = FxHashSet::default();
    h.insert(rep.identity());
    let mut pending: Vec<R::Elem> = seeds.to_vec();
    while let Some(s) = pending.pop() {
        if h.contains(&s) {
            continue;
        }
        extend(rep, &mut h, &mut gens, s.clone());
        // conjugates of the new generator must also lie in the closure
        for g in ambient {
            pending.push(rep.conjugate(&s, g));
        }
    }
    (h, gens)
}

/// Commutator subgroup of the group generated by `gens`.
pub fn derived_subgroup<R: GroupRep>(rep: &R, gens: &[R::Elem]) -> (FxHashSet<R::Elem>, Vec<R::Elem>) {
    let mut seeds = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let c = rep.commutator(x, y);
            if !rep.is_identity(&c) {
                seeds.push(c);
            }
        }
    }
    normal_closure(rep, gens, &seeds)
}

/// Walks the derived series starting from a group of known order.
pub fn derived_series<R: GroupRep>(rep: &R, gens: &[R::Elem], order: u64) -> DerivedInfo {
    let mut series = vec![order];
    let mut current = gens.to_vec();
    loop {
        let (h, next) = derived_subgroup(rep, &current);
        let k = h.len() as u64;
        let last = *series.last().unwrap();
        if k == last {
            // the series stabilized at a nontrivial perfect group
            let perfect = series.len() == 1;
            return DerivedInfo { series, perfect, solvable: false, derived_length: None };
        }
        series.push(k);
        if k == 1 {
            let len = series.len() - 1;
            return DerivedInfo { series, perfect: order == 1, solvable: true, derived_length: Some(len) };
        }
        current = next;
    }
}

/// Number of elements commuting with every generator.
pub fn center_order<R: GroupRep>(rep: &R, elements: &FxHashSet<R::Elem>, gens: &[R::Elem]) -> u64 {
    elements
        .iter()
        .filter(|x| gens.iter().all(|g| rep.mul(x, g) == rep.mul(g, x)))
        .count() as u64
}

/// Order of a single element, found by repeated multiplication.
pub fn element_order<R: GroupRep>(rep: &R, x: &R::Elem, bound: u64) -> Option<u64> {
    let mut y = x.clone();
    for k in 1..=bound {
        if rep.is_identity(&y) {
            return Some(k);
        }
        y = rep.mul(&y, x);
    }
    None
}

/// Histogram of element orders over `samples` random words, reproducible for a fixed seed.
pub fn order_histogram<R: GroupRep>(
    rep: &R,
    gens: &[R::Elem],
    order: u64,
    samples: usize,
    seed: u64,
) -> BTreeMap<u64, usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hist = BTreeMap::new();
    if gens.is_empty() {
        return hist;
    }
    for _ in 0..samples {
        let mut x = rep.identity();
        for _ in 0..32 {
            x = rep.mul(&x, &gens[rng.gen_range(0..gens.len())]);
        }
        if let Some(k) = element_order(rep, &x, order) {
            *hist.entry(k).or_insert(0) += 1;
        }
    }
    hist
}

/// Checks closure under multiplication on `pairs` random pairs of elements.
pub fn spot_check_closed<R: GroupRep>(rep: &R, elements: &FxHashSet<R::Elem>, pairs: usize, seed: u64) -> bool {
    let list: Vec<&R::Elem> = elements.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..pairs).all(|_| {
        let x = list[rng.gen_range(0..list.len())];
        let y = list[rng.gen_range(0..list.len())];
        elements.contains(&rep.mul(x, y)) && elements.contains(&rep.inv(x))
    })
}

/// Convenience: order of the group generated by `gens`, if at most `cutoff`.
pub fn group_order<R: GroupRep>(rep: &R, gens: &[R::Elem], cutoff: usize) -> Option<u64> {
    let c = bfs(rep, gens, cutoff);
    c.complete.then_some(c.elements.len() as u64)
}
