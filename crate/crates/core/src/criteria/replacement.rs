//! The replacement construction `A* = (A ∩ A^b)[A, b]` for an abelian
//! `A ≤ P` containing `[B, B]`, `B ⊴ P`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

fn prime_of(p_group: &Group) -> Option<u64> {
    let n = p_group.order() as u64;
    (2..=n).find(|d| n.is_multiple_of(*d))
}

/// Checks the shared preconditions on `(P, B, A)`.
fn check_triple(p_group: &Group, b_sub: &Group, a: &Group) -> Result<()> {
    if !b_sub.is_normal_in(p_group) {
        return Err(Error::PreconditionViolated("B is not normal in P"));
    }
    if !a.is_subgroup_of(p_group) || !a.is_abelian() {
        return Err(Error::PreconditionViolated("A is not an abelian subgroup of P"));
    }
    if prime_of(p_group) == Some(2) && !b_sub.is_abelian() {
        return Err(Error::PreconditionViolated("p = 2 requires B abelian"));
    }
    if !b_sub.derived_subgroup().is_subgroup_of(a) {
        return Err(Error::PreconditionViolated("[B, B] is not contained in A"));
    }
    Ok(())
}

/// `N_B(N_P(A)) − N_B(A)`, in element order.
pub fn replacement_elements(p_group: &Group, b_sub: &Group, a: &Group) -> Result<Vec<Perm>> {
    let npa = p_group.normalizer(a)?;
    Ok(b_sub
        .elements()
        .iter()
        .filter(|b| npa.is_normalized_by(b) && !a.is_normalized_by(b))
        .cloned()
        .collect())
}

/// `A* = (A ∩ A^b)[A, b]`, with its four defining properties verified.
pub fn replacement(p_group: &Group, b_sub: &Group, a: &Group, b: &Perm) -> Result<Group> {
    check_triple(p_group, b_sub, a)?;
    if !b_sub.contains(b) {
        return Err(Error::PreconditionViolated("b is not in B"));
    }
    if a.is_normalized_by(b) {
        return Err(Error::PreconditionViolated("b normalizes A"));
    }
    if !p_group.normalizer(a)?.is_normalized_by(b) {
        return Err(Error::PreconditionViolated("b does not normalize N_P(A)"));
    }
    let a_b = a.conjugate_unchecked(b);
    let star = p_group.join(&p_group.meet(a, &a_b)?, &p_group.commutator_with_element(a, b)?)?;
    check_replacement_properties(p_group, b_sub, a, &star)?;
    Ok(star)
}

/// Properties of a replacement `A*` of `A` with respect to `B`:
/// abelian and containing `[B, B]`; `A ∩ B < A* ∩ B < B`; `A` and `A*`
/// normalize each other; `|A*| = |A|`.
pub fn check_replacement_properties(p_group: &Group, b_sub: &Group, a: &Group, star: &Group) -> Result<()> {
    if !star.is_abelian() {
        return Err(Error::PropertyFailure("A* is not abelian"));
    }
    if !b_sub.derived_subgroup().is_subgroup_of(star) {
        return Err(Error::PropertyFailure("A* does not contain [B, B]"));
    }
    let a_b = p_group.meet(a, b_sub)?;
    let star_b = p_group.meet(star, b_sub)?;
    if !(a_b.is_subgroup_of(&star_b) && a_b.order() < star_b.order()) {
        return Err(Error::PropertyFailure("A* ∩ B does not strictly contain A ∩ B"));
    }
    if star_b.order() >= b_sub.order() {
        return Err(Error::PropertyFailure("A* ∩ B is not proper in B"));
    }
    if !a.is_normalized_by_group(star) || !star.is_normalized_by_group(a) {
        return Err(Error::PropertyFailure("A and A* do not normalize each other"));
    }
    if star.order() != a.order() {
        return Err(Error::PropertyFailure("|A*| differs from |A|"));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalReplacement {
    pub result: Group,
    pub steps: usize,
}

/// Repeats the replacement, each time choosing `b` to maximize `|A* ∩ B|`
/// (least `b` on ties), until `B` normalizes the result.
pub fn replacement_maximal(p_group: &Group, b_sub: &Group, a: &Group) -> Result<MaximalReplacement> {
    check_triple(p_group, b_sub, a)?;
    let mut current = a.clone();
    let mut steps = 0;
    while !current.is_normalized_by_group(b_sub) {
        let candidates = replacement_elements(p_group, b_sub, &current)?;
        if candidates.is_empty() {
            return Err(Error::PropertyFailure("no b in N_B(N_P(A)) − N_B(A) although B does not normalize A"));
        }
        let mut best: Option<(usize, Group)> = None;
        for b in &candidates {
            let star = replacement(p_group, b_sub, &current, b)?;
            let overlap = p_group.meet(&star, b_sub)?.order();
            if best.as_ref().is_none_or(|(o, _)| overlap > *o) {
                best = Some((overlap, star));
            }
        }
        current = best.expect("candidates is nonempty").1;
        steps += 1;
    }
    Ok(MaximalReplacement { result: current, steps })
}
