use rustc_hash::FxHashSet;

use super::rep::GroupRep;

/// Result of a breadth-first enumeration from the identity.
#[derive(Clone, Debug)]
pub struct Closure<E> {
    pub elements: FxHashSet<E>,
    /// Number of elements first reached at each word length.
    pub layers: Vec<usize>,
    /// False when enumeration stopped because more than `cutoff` elements were found.
    pub complete: bool,
}

/// Enumerates the monoid generated by `gens` by right multiplication. For
/// invertible generators of finite order this is the generated group.
pub fn bfs<R: GroupRep>(rep: &R, gens: &[R::Elem], cutoff: usize) -> Closure<R::Elem> {
    let id = rep.identity();
    let mut elements = FxHashSet::default();
    elements.insert(id.clone());
    let mut layers = vec![1];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = rep.mul(x, g);
                if !elements.contains(&y) {
                    elements.insert(y.clone());
                    next.push(y);
                    if elements.len() > cutoff {
                        layers.push(next.len());
                        return Closure { elements, layers, complete: false };
                    }
                }
            }
        }
        if !next.is_empty() {
            layers.push(next.len());
        }
        frontier = next;
    }
    Closure { elements, layers, complete: true }
}

/// Extends a subgroup `h` (closed under right multiplication by `gens`) to
/// the subgroup generated by `gens` and `extra`. `gens` gains `extra`.
pub fn extend<R: GroupRep>(rep: &R, h: &mut FxHashSet<R::Elem>, gens: &mut Vec<R::Elem>, extra: R::Elem) {
    let mut frontier: Vec<R::Elem> = Vec::new();
    for x in h.iter() {
        let y = rep.mul(x, &extra);
        if !h.contains(&y) {
            frontier.push(y);
        }
    }
    gens.push(extra);
    for y in &frontier {
        h.insert(y.clone());
    }
    // frontier may hold duplicates; the set absorbs them
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens.iter() {
                let y = rep.mul(x, g);
                if h.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
}
