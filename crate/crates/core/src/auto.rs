//! Brute-force automorphism groups of small groups: every assignment of
//! generator images (of matching orders) is tried and kept when it extends
//! to a bijective homomorphism.

use alloc::vec::Vec;

use crate::group::Group;
use crate::perm::Perm;

/// Default cap on the number of generator-image tuples tried.
pub const DEFAULT_AUTOMORPHISM_BUDGET: usize = 50_000;

/// An automorphism, as the images of `group.elements()` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Perm>,
}

impl Automorphism {
    pub fn apply(&self, group: &Group, x: &Perm) -> Option<&Perm> {
        group.elements().binary_search(x).ok().map(|i| &self.images[i])
    }
}

/// All automorphisms of `g`, or `None` when the search exceeds `budget` tuples.
pub fn automorphisms(g: &Group, budget: usize) -> Option<Vec<Automorphism>> {
    let gens = g.generators();
    let candidates: Vec<Vec<&Perm>> = gens
        .iter()
        .map(|s| {
            let order = s.order();
            g.elements().iter().filter(|x| x.order() == order).collect()
        })
        .collect();
    let mut total: usize = 1;
    for c in &candidates {
        total = total.checked_mul(c.len())?;
        if total > budget {
            return None;
        }
    }
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; gens.len()];
    loop {
        let targets: Vec<&Perm> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(images) = extend(g, &targets) {
            out.push(Automorphism { images });
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Some(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend(g: &Group, targets: &[&Perm]) -> Option<Vec<Perm>> {
    let elements = g.elements();
    let index = |x: &Perm| elements.binary_search(x).expect("closure stays in g");
    let mut images: Vec<Option<Perm>> = alloc::vec![None; elements.len()];
    let id = g.identity();
    let start = index(&id);
    images[start] = Some(id);
    let mut queue = alloc::vec![start];
    let mut head = 0;
    while head < queue.len() {
        let xi = queue[head];
        head += 1;
        let fx = images[xi].clone().expect("queued elements have images");
        for (s, t) in g.generators().iter().zip(targets) {
            let yi = index(&(&elements[xi] * s));
            let fy = &fx * t;
            match &images[yi] {
                Some(existing) if *existing != fy => return None,
                Some(_) => {}
                None => {
                    images[yi] = Some(fy);
                    queue.push(yi);
                }
            }
        }
    }
    let images: Vec<Perm> = images.into_iter().map(|x| x.expect("every element is reached")).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    (sorted.len() == images.len()).then_some(images)
}

/// `h` is mapped onto itself by every automorphism in `auts`.
pub fn is_characteristic(g: &Group, h: &Group, auts: &[Automorphism]) -> bool {
    auts.iter()
        .all(|a| h.generators().iter().all(|x| a.apply(g, x).is_some_and(|y| h.contains(y))))
}
