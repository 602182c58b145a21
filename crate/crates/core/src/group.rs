//! Finite permutation groups with fully materialized element sets.
//!
//! Every [`Group`] stores its elements sorted, so membership is a binary
//! search and two groups are equal exactly when their element sets are.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::Deref;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_LIMIT: usize = 100_000;

struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

/// An immutable permutation group. Cloning is cheap.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

/// BFS closure of `gens`, or `None` once more than `limit` elements appear.
fn closure(degree: usize, gens: &[Perm], limit: usize) -> Option<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = alloc::vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for s in gens {
            let y = &x * s;
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return None;
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    Some(queue)
}

impl Group {
    pub fn trivial(degree: usize) -> Group {
        Group(Arc::new(GroupData {
            degree,
            generators: Vec::new(),
            elements: alloc::vec![Perm::identity(degree)],
        }))
    }

    /// `⟨gens⟩` with the default element limit.
    pub fn generated(degree: usize, gens: &[Perm]) -> Result<Group> {
        Group::generated_with_limit(degree, gens, DEFAULT_ELEMENT_LIMIT)
    }

    pub fn generated_with_limit(degree: usize, gens: &[Perm], limit: usize) -> Result<Group> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let generators: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let elements = closure(degree, &generators, limit).ok_or(Error::SizeLimitExceeded { limit })?;
        Ok(Group(Arc::new(GroupData { degree, generators, elements })))
    }

    /// Wraps an element set already known to be a subgroup, picking a small
    /// generating set greedily (elements of largest order first).
    pub(crate) fn from_subgroup_elements(degree: usize, mut elements: Vec<Perm>) -> Group {
        elements.sort_unstable();
        elements.dedup();
        let mut by_order: Vec<(u64, &Perm)> = elements.iter().map(|x| (x.order(), x)).collect();
        by_order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
        let mut gens: Vec<Perm> = Vec::new();
        let mut current: Vec<Perm> = alloc::vec![Perm::identity(degree)];
        for (_, x) in by_order {
            if current.len() == elements.len() {
                break;
            }
            if current.binary_search(x).is_err() {
                gens.push(x.clone());
                current = closure(degree, &gens, usize::MAX).expect("unbounded closure");
            }
        }
        debug_assert_eq!(current, elements);
        Group(Arc::new(GroupData { degree, generators: gens, elements }))
    }

    /// Wraps generators and their (sorted) closure computed elsewhere.
    pub(crate) fn from_parts(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Group {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Group(Arc::new(GroupData { degree, generators, elements }))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.generators
    }

    /// All elements, sorted.
    pub fn elements(&self) -> &[Perm] {
        &self.0.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn contains(&self, x: &Perm) -> bool {
        x.degree() == self.degree() && self.0.elements.binary_search(x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// True when conjugation by `g` maps `self` onto itself.
    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        self.generators().iter().all(|h| self.contains(&h.conjugate_by(g)))
    }

    /// True when every element of `other` normalizes `self`.
    pub fn is_normalized_by_group(&self, other: &Group) -> bool {
        other.generators().iter().all(|g| self.is_normalized_by(g))
    }

    pub fn is_normal_in(&self, ambient: &Group) -> bool {
        self.is_subgroup_of(ambient) && self.is_normalized_by_group(ambient)
    }

    fn require_subgroup(&self, h: &Group) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(Error::NotInAmbient)
        }
    }

    fn require_element(&self, g: &Perm) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::NotInAmbient)
        }
    }

    fn filter(&self, pred: impl Fn(&Perm) -> bool) -> Group {
        let elements = self.elements().iter().filter(|x| pred(x)).cloned().collect();
        Group::from_subgroup_elements(self.degree(), elements)
    }

    /// Smallest subgroup of `self` containing `gens`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Group> {
        for g in gens {
            self.require_element(g)?;
        }
        Group::generated_with_limit(self.degree(), gens, self.order())
    }

    pub fn cyclic_subgroup(&self, x: &Perm) -> Result<Group> {
        self.subgroup(core::slice::from_ref(x))
    }

    /// `h^g = { g⁻¹ x g : x ∈ h }` for `h ≤ self`, `g ∈ self`.
    pub fn conjugate(&self, h: &Group, g: &Perm) -> Result<Group> {
        self.require_subgroup(h)?;
        self.require_element(g)?;
        Ok(h.conjugate_unchecked(g))
    }

    /// Conjugate by an arbitrary permutation of the same degree.
    pub fn conjugate_unchecked(&self, g: &Perm) -> Group {
        let mut elements: Vec<Perm> = self.elements().iter().map(|x| x.conjugate_by(g)).collect();
        elements.sort_unstable();
        let generators = self.generators().iter().map(|x| x.conjugate_by(g)).collect();
        Group(Arc::new(GroupData { degree: self.degree(), generators, elements }))
    }

    pub fn normalizer(&self, h: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        Ok(self.filter(|g| h.is_normalized_by(g)))
    }

    pub fn centralizer(&self, h: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        Ok(self.filter(|g| h.generators().iter().all(|x| x.commutes_with(g))))
    }

    pub fn center(&self) -> Group {
        self.filter(|g| self.generators().iter().all(|x| x.commutes_with(g)))
    }

    /// Normal closure in `self` of the subgroup generated by `set`.
    pub fn normal_closure(&self, set: &[Perm]) -> Result<Group> {
        let mut current = self.subgroup(set)?;
        loop {
            let mut extra = Vec::new();
            for x in current.generators() {
                for g in self.generators() {
                    let y = x.conjugate_by(g);
                    if !current.contains(&y) && !extra.contains(&y) {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return Ok(current);
            }
            let mut gens = current.generators().to_vec();
            gens.extend(extra);
            current = self.subgroup(&gens)?;
        }
    }

    /// `[K, H]` for `K, H ≤ self`.
    pub fn commutator_subgroup(&self, k: &Group, h: &Group) -> Result<Group> {
        self.require_subgroup(k)?;
        self.require_subgroup(h)?;
        let join = self.join(k, h)?;
        let comms: Vec<Perm> = k
            .generators()
            .iter()
            .flat_map(|x| h.generators().iter().map(move |y| Perm::commutator(x, y)))
            .filter(|c| !c.is_identity())
            .collect();
        join.normal_closure(&comms)
    }

    /// `[self, self]`.
    pub fn derived_subgroup(&self) -> Group {
        self.commutator_subgroup(self, self).expect("self is a subgroup of self")
    }

    /// `[A, b] = ⟨[a, b] : a ∈ A⟩` for `A ≤ self`, `b ∈ self`.
    pub fn commutator_with_element(&self, a: &Group, b: &Perm) -> Result<Group> {
        self.require_subgroup(a)?;
        self.require_element(b)?;
        let comms: Vec<Perm> = a
            .elements()
            .iter()
            .map(|x| Perm::commutator(x, b))
            .filter(|c| !c.is_identity())
            .collect();
        self.subgroup(&comms)
    }

    pub fn meet(&self, h: &Group, k: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        self.require_subgroup(k)?;
        Ok(h.filter(|x| k.contains(x)))
    }

    pub fn join(&self, h: &Group, k: &Group) -> Result<Group> {
        self.require_subgroup(h)?;
        self.require_subgroup(k)?;
        let mut gens = h.generators().to_vec();
        gens.extend(k.generators().iter().filter(|x| !h.contains(x)).cloned());
        self.subgroup(&gens)
    }

    /// Element-wise subset test, valid for any two groups of equal degree.
    pub fn is_subset_of(&self, other: &Group) -> bool {
        self.degree() == other.degree() && self.elements().iter().all(|x| other.contains(x))
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree() && self.elements() == other.elements())
    }
}

impl Eq for Group {}

impl Hash for Group {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree().hash(state);
        self.elements().hash(state);
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, gens [", self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

/// A group together with the ambient group it was taken from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    ambient: Group,
    group: Group,
}

impl Subgroup {
    pub fn new(ambient: Group, group: Group) -> Result<Subgroup> {
        if !group.is_subgroup_of(&ambient) {
            return Err(Error::NotInAmbient);
        }
        Ok(Subgroup { ambient, group })
    }

    pub fn whole(ambient: Group) -> Subgroup {
        Subgroup { group: ambient.clone(), ambient }
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }

    fn same_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn meet(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_ambient(other)?;
        let group = self.ambient.meet(&self.group, &other.group)?;
        Ok(Subgroup { ambient: self.ambient.clone(), group })
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_ambient(other)?;
        let group = self.ambient.join(&self.group, &other.group)?;
        Ok(Subgroup { ambient: self.ambient.clone(), group })
    }

    pub fn conjugate(&self, g: &Perm) -> Result<Subgroup> {
        let group = self.ambient.conjugate(&self.group, g)?;
        Ok(Subgroup { ambient: self.ambient.clone(), group })
    }
}

impl Deref for Subgroup {
    type Target = Group;

    fn deref(&self) -> &Group {
        &self.group
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[usize]]) -> Perm {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    fn s4() -> Group {
        Group::generated(4, &[p(4, &[&[1, 2, 3, 4]]), p(4, &[&[1, 2]])]).unwrap()
    }

    #[test]
    fn empty_generating_set_gives_trivial_group() {
        let g = Group::generated(3, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Perm::identity(3)));
    }

    #[test]
    fn degree_mismatch_and_limit() {
        assert!(matches!(
            Group::generated(3, &[p(4, &[&[1, 2]])]),
            Err(Error::DegreeMismatch { expected: 3, found: 4 })
        ));
        assert!(matches!(
            Group::generated_with_limit(4, s4().generators(), 10),
            Err(Error::SizeLimitExceeded { limit: 10 })
        ));
    }

    #[test]
    fn subgroup_rejects_foreign_generators() {
        let a4 = s4().derived_subgroup();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.subgroup(&[p(4, &[&[1, 2]])]), Err(Error::NotInAmbient));
    }

    #[test]
    fn conjugate_of_subgroup_by_member_is_itself() {
        let g = s4();
        let h = g.subgroup(&[p(4, &[&[1, 2, 3]]), p(4, &[&[1, 2]])]).unwrap();
        for x in h.elements() {
            assert_eq!(g.conjugate(&h, x).unwrap(), h);
        }
    }

    #[test]
    fn subgroup_meet_requires_shared_ambient() {
        let g = s4();
        let a = Subgroup::new(g.clone(), g.cyclic_subgroup(&p(4, &[&[1, 2]])).unwrap()).unwrap();
        let other = Group::generated(4, &[p(4, &[&[1, 2]])]).unwrap();
        let b = Subgroup::whole(other);
        assert_eq!(a.meet(&b), Err(Error::AmbientMismatch));
        let c = Subgroup::new(g.clone(), g.cyclic_subgroup(&p(4, &[&[1, 2, 3]])).unwrap()).unwrap();
        assert_eq!(a.join(&c).unwrap().order(), 6);
        assert_eq!(a.meet(&c).unwrap().order(), 1);
        assert_eq!(c.conjugate(&p(4, &[&[3, 4]])).unwrap().group(), &g.cyclic_subgroup(&p(4, &[&[1, 2, 4]])).unwrap());
    }

    #[test]
    fn commutator_with_centralizing_element_is_trivial() {
        let g = s4();
        let a = g.subgroup(&[p(4, &[&[1, 2]])]).unwrap();
        let b = p(4, &[&[3, 4]]);
        assert!(g.commutator_with_element(&a, &b).unwrap().is_trivial());
        assert_eq!(g.commutator_with_element(&a, &p(4, &[&[2, 3]])).unwrap().order(), 3);
    }
}
