//! Subgroup lattices of p-groups and families of abelian subgroups.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::sylow::{is_p_power, require_prime};

/// Largest `|P| = p^k` whose lattice will be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBound {
    /// Overrides the default exponent (5 for p = 3, 4 otherwise).
    pub max_exponent: Option<u32>,
}

impl LatticeBound {
    pub const DEFAULT: LatticeBound = LatticeBound { max_exponent: None };

    pub fn exponent(&self, p: u64) -> u32 {
        self.max_exponent.unwrap_or(if p == 3 { 5 } else { 4 })
    }

    pub fn max_order(&self, p: u64) -> usize {
        (p as usize).saturating_pow(self.exponent(p))
    }
}

impl Default for LatticeBound {
    fn default() -> Self {
        LatticeBound::DEFAULT
    }
}

/// All subgroups of a p-group, sorted by order (trivial first, whole group last).
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    prime: u64,
    group: Group,
    subgroups: Vec<Group>,
    normal: Vec<bool>,
    index: HashMap<Group, usize>,
}

impl SubgroupLattice {
    /// Enumerates layer by layer: each subgroup of order `p^(k+1)` is
    /// `H⟨x⟩` for one of its maximal subgroups `H` and some `x ∈ N_P(H) ∖ H`
    /// with `x^p ∈ H`.
    pub fn enumerate(group: &Group, p: u64, bound: LatticeBound) -> Result<SubgroupLattice> {
        require_prime(p)?;
        let order = group.order();
        if !is_p_power(order as u64, p) {
            return Err(Error::NotAPGroup { order });
        }
        let max = bound.max_order(p);
        if order > max {
            return Err(Error::LatticeTooLarge { order, bound: max });
        }
        let degree = group.degree();
        let mut subgroups: Vec<Group> = alloc::vec![Group::trivial(degree)];
        let mut layer: Vec<Group> = subgroups.clone();
        while layer.first().is_some_and(|h| h.order() < order) {
            let mut seen: HashSet<Vec<Perm>> = HashSet::new();
            let mut next: Vec<Group> = Vec::new();
            for h in &layer {
                let mut covered: HashSet<Perm> = HashSet::new();
                for x in group.elements() {
                    if h.contains(x) || covered.contains(x) || !h.is_normalized_by(x) || !h.contains(&x.pow(p)) {
                        continue;
                    }
                    let mut elements = Vec::with_capacity(h.order() * p as usize);
                    let mut power = Perm::identity(degree);
                    for _ in 0..p {
                        elements.extend(h.elements().iter().map(|y| y * &power));
                        power = &power * x;
                    }
                    elements.sort_unstable();
                    covered.extend(elements.iter().cloned());
                    if seen.insert(elements.clone()) {
                        let mut gens = h.generators().to_vec();
                        gens.push(x.clone());
                        next.push(Group::from_parts(degree, gens, elements));
                    }
                }
            }
            next.sort_by(|a, b| a.elements().cmp(b.elements()));
            subgroups.extend(next.iter().cloned());
            layer = next;
        }
        let normal = subgroups.iter().map(|h| h.is_normalized_by_group(group)).collect();
        let index = subgroups.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect();
        Ok(SubgroupLattice { prime: p, group: group.clone(), subgroups, normal, index })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Group] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Group {
        &self.subgroups[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn index_of(&self, h: &Group) -> Option<usize> {
        self.index.get(h).copied()
    }

    /// True when subgroup `i` is contained in subgroup `j`.
    pub fn is_contained(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].is_subgroup_of(&self.subgroups[j])
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Group> + '_ {
        self.subgroups.iter().zip(&self.normal).filter(|(_, n)| **n).map(|(h, _)| h)
    }

    /// Indices of the P-conjugates of subgroup `i`.
    pub fn p_conjugates(&self, i: usize) -> Vec<usize> {
        let mut out = alloc::vec![i];
        let mut head = 0;
        while head < out.len() {
            let h = self.subgroups[out[head]].clone();
            head += 1;
            for g in self.group.generators() {
                let j = self.index[&h.conjugate_unchecked(g)];
                if !out.contains(&j) {
                    out.push(j);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// One index (the least) per P-conjugacy class of subgroups.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut done = alloc::vec![false; self.len()];
        let mut reps = Vec::new();
        for i in 0..self.len() {
            if done[i] {
                continue;
            }
            reps.push(i);
            for j in self.p_conjugates(i) {
                done[j] = true;
            }
        }
        reps
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &Group> + '_ {
        let top = self.group.order();
        self.subgroups.iter().filter(move |h| h.order() * self.prime as usize == top)
    }

    pub fn abelian_subgroups(&self) -> impl Iterator<Item = &Group> + '_ {
        self.subgroups.iter().filter(|h| h.is_abelian())
    }
}

pub fn is_elementary_abelian(h: &Group, p: u64) -> bool {
    h.is_abelian() && h.generators().iter().all(|x| x.pow(p).is_identity())
}

/// Which abelian subgroups make up a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    AllAbelian,
    /// Abelian subgroups of maximal order (the family generating `J(P)`).
    MaxAbelian,
    MaxElementaryAbelian,
    Custom(Vec<Group>),
}

impl FamilyKind {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyKind::AllAbelian => "all-abelian",
            FamilyKind::MaxAbelian => "max-abelian",
            FamilyKind::MaxElementaryAbelian => "max-elementary-abelian",
            FamilyKind::Custom(_) => "custom",
        }
    }
}

/// A set of abelian subgroups of a fixed p-group, deduplicated by element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianFamily {
    ambient: Group,
    members: Vec<Group>,
    label: String,
}

impl AbelianFamily {
    pub fn build(lattice: &SubgroupLattice, kind: &FamilyKind) -> Result<AbelianFamily> {
        let p = lattice.prime();
        let members: Vec<Group> = match kind {
            FamilyKind::AllAbelian => lattice.abelian_subgroups().cloned().collect(),
            FamilyKind::MaxAbelian => max_order_members(lattice.abelian_subgroups()),
            FamilyKind::MaxElementaryAbelian => {
                max_order_members(lattice.abelian_subgroups().filter(|h| is_elementary_abelian(h, p)))
            }
            FamilyKind::Custom(list) => return AbelianFamily::custom(lattice.group(), list.clone(), kind.label()),
        };
        Ok(AbelianFamily { ambient: lattice.group().clone(), members, label: String::from(kind.label()) })
    }

    /// A user-supplied family; every member must be an abelian subgroup of `ambient`.
    pub fn custom(ambient: &Group, list: Vec<Group>, label: &str) -> Result<AbelianFamily> {
        let mut members: Vec<Group> = Vec::new();
        for h in list {
            if !h.is_subgroup_of(ambient) {
                return Err(Error::NotInP);
            }
            if !h.is_abelian() {
                return Err(Error::FamilyNotAbelian);
            }
            if !members.contains(&h) {
                members.push(h);
            }
        }
        members.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        Ok(AbelianFamily { ambient: ambient.clone(), members, label: String::from(label) })
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    pub fn members(&self) -> &[Group] {
        &self.members
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Group) -> bool {
        self.members.contains(h)
    }

    /// `J_𝒜 = ⟨A : A ∈ 𝒜⟩`.
    pub fn join(&self) -> Group {
        let gens: Vec<Perm> = self.members.iter().flat_map(|a| a.generators().iter().cloned()).collect();
        self.ambient.subgroup(&gens).expect("members lie in the ambient group")
    }

    /// `I_𝒜 = ⋂ A`, with `I_∅ = 1`.
    pub fn meet(&self) -> Group {
        let Some((first, rest)) = self.members.split_first() else {
            return Group::trivial(self.ambient.degree());
        };
        let elements = first
            .elements()
            .iter()
            .filter(|x| rest.iter().all(|a| a.contains(x)))
            .cloned()
            .collect();
        Group::from_subgroup_elements(self.ambient.degree(), elements)
    }

    /// `𝒜|Q = {A ∈ 𝒜 : A ≤ Q}`.
    pub fn restrict(&self, q: &Group) -> Result<AbelianFamily> {
        if !q.is_subgroup_of(&self.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let members = self.members.iter().filter(|a| a.is_subgroup_of(q)).cloned().collect();
        Ok(AbelianFamily { ambient: self.ambient.clone(), members, label: self.label.clone() })
    }

    /// Same ambient, members replaced without validation.
    pub(crate) fn with_members(&self, members: Vec<Group>, label: &str) -> AbelianFamily {
        AbelianFamily { ambient: self.ambient.clone(), members, label: String::from(label) }
    }
}

fn max_order_members<'a>(iter: impl Iterator<Item = &'a Group>) -> Vec<Group> {
    let all: Vec<&Group> = iter.collect();
    let top = all.iter().map(|h| h.order()).max().unwrap_or(0);
    all.into_iter().filter(|h| h.order() == top).cloned().collect()
}

/// Thompson subgroup `J(P)`, generated by the abelian subgroups of maximal order.
pub fn thompson_j(lattice: &SubgroupLattice) -> Group {
    AbelianFamily::build(lattice, &FamilyKind::MaxAbelian).expect("built-in family").join()
}

/// `Z(J(P))`.
pub fn thompson_zj(lattice: &SubgroupLattice) -> Group {
    thompson_j(lattice).center()
}

/// Length of the lower central series of `h`; `None` if `h` is not nilpotent.
pub fn nilpotency_class(h: &Group) -> Option<usize> {
    let mut class = 0;
    let mut term = h.clone();
    while !term.is_trivial() {
        let next = h.commutator_subgroup(&term, h).expect("lower central terms lie in h");
        if next == term {
            return None;
        }
        term = next;
        class += 1;
    }
    Some(class)
}

/// Normal subgroups `B ⊴ P` of nilpotency class at most two.
pub fn normal_class_le2_subgroups(lattice: &SubgroupLattice) -> Vec<Group> {
    lattice
        .normal_subgroups()
        .filter(|b| nilpotency_class(b).is_some_and(|c| c <= 2))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[usize]]) -> Perm {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn c3_and_c3xc3() {
        let c3 = Group::generated(3, &[p(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(SubgroupLattice::enumerate(&c3, 3, LatticeBound::DEFAULT).unwrap().len(), 2);
        let e9 = Group::generated(6, &[p(6, &[&[1, 2, 3]]), p(6, &[&[4, 5, 6]])]).unwrap();
        let lat = SubgroupLattice::enumerate(&e9, 3, LatticeBound::DEFAULT).unwrap();
        assert_eq!(lat.len(), 6);
        assert!((0..lat.len()).all(|i| lat.is_normal(i)));
    }

    #[test]
    fn rejects_non_p_groups_and_large_groups() {
        let s3 = Group::generated(3, &[p(3, &[&[1, 2, 3]]), p(3, &[&[1, 2]])]).unwrap();
        assert_eq!(SubgroupLattice::enumerate(&s3, 3, LatticeBound::DEFAULT).unwrap_err(), Error::NotAPGroup { order: 6 });
        let e9 = Group::generated(6, &[p(6, &[&[1, 2, 3]]), p(6, &[&[4, 5, 6]])]).unwrap();
        let tight = LatticeBound { max_exponent: Some(1) };
        assert_eq!(SubgroupLattice::enumerate(&e9, 3, tight).unwrap_err(), Error::LatticeTooLarge { order: 9, bound: 3 });
    }

    #[test]
    fn empty_family_meet_is_trivial() {
        let c3 = Group::generated(3, &[p(3, &[&[1, 2, 3]])]).unwrap();
        let lat = SubgroupLattice::enumerate(&c3, 3, LatticeBound::DEFAULT).unwrap();
        let fam = AbelianFamily::build(&lat, &FamilyKind::Custom(Vec::new())).unwrap();
        assert!(fam.is_empty());
        assert!(fam.meet().is_trivial());
        assert!(fam.join().is_trivial());
    }

    #[test]
    fn custom_family_validation() {
        let s3 = Group::generated(3, &[p(3, &[&[1, 2, 3]]), p(3, &[&[1, 2]])]).unwrap();
        let c3 = Group::generated(3, &[p(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(AbelianFamily::custom(&c3, alloc::vec![s3.clone()], "x").unwrap_err(), Error::NotInP);
        assert_eq!(AbelianFamily::custom(&s3, alloc::vec![s3.clone()], "x").unwrap_err(), Error::FamilyNotAbelian);
        let fam = AbelianFamily::custom(&c3, alloc::vec![c3.clone(), c3.clone()], "x").unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.restrict(&fam.ambient().clone()).unwrap(), fam);
        assert_eq!(fam.restrict(&s3).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn abelian_class() {
        let e9 = Group::generated(6, &[p(6, &[&[1, 2, 3]]), p(6, &[&[4, 5, 6]])]).unwrap();
        assert_eq!(nilpotency_class(&e9), Some(1));
        assert_eq!(nilpotency_class(&Group::trivial(6)), Some(0));
        let s3 = Group::generated(3, &[p(3, &[&[1, 2, 3]]), p(3, &[&[1, 2]])]).unwrap();
        assert_eq!(nilpotency_class(&s3), None);
    }
}
