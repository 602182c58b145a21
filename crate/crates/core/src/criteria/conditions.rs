//! Hypotheses (i) and (ii) on an abelian family `𝒜` over `P`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fusion::FusionContext;
use crate::group::Group;
use crate::lattice::{normal_class_le2_subgroups, AbelianFamily, SubgroupLattice};
use crate::perm::Perm;
use crate::settings::Quantifier;

use super::replacement::{replacement, replacement_elements};

/// Outcome of a hypothesis check: `holds` with no witness, or a violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionOutcome<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> ConditionOutcome<W> {
    fn pass() -> Self {
        ConditionOutcome { holds: true, witness: None }
    }

    fn fail(w: W) -> Self {
        ConditionOutcome { holds: false, witness: Some(w) }
    }
}

/// A `Q ⊴ P` and `g ∈ N_G(Q)` moving `I_{𝒜|Q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceWitness {
    pub q: Group,
    pub g: Perm,
}

/// A class-≤2 `B ⊴ P` and member `A` breaking condition (ii); `b` is an
/// element of `B` not normalizing `A` (variant A) or an element of
/// `N_B(N_P(A)) − N_B(A)` whose replacement leaves the family (variant B).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizingWitness {
    pub b_sub: Group,
    pub a: Group,
    pub b: Perm,
}

fn require_family_over(lattice: &SubgroupLattice, family: &AbelianFamily) -> Result<()> {
    if family.ambient() == lattice.group() {
        Ok(())
    } else {
        Err(Error::AmbientMismatch)
    }
}

/// (i): for every `Q ⊴ P`, `I_{𝒜|Q}` is invariant under `N_G(Q)`, i.e. `Aut_F(Q)`.
pub fn check_condition_i(ctx: &FusionContext, family: &AbelianFamily) -> Result<ConditionOutcome<InvarianceWitness>> {
    require_family_over(ctx.lattice(), family)?;
    for q in ctx.lattice().normal_subgroups() {
        let i = family.restrict(q)?.meet();
        let n = ctx.group().normalizer(q)?;
        if let Some(g) = n.generators().iter().find(|g| !i.is_normalized_by(g)) {
            return Ok(ConditionOutcome::fail(InvarianceWitness { q: q.clone(), g: g.clone() }));
        }
    }
    Ok(ConditionOutcome::pass())
}

/// Re-evaluates a condition (i) witness.
pub fn invariance_violated(family: &AbelianFamily, w: &InvarianceWitness) -> Result<bool> {
    Ok(!family.restrict(&w.q)?.meet().is_normalized_by(&w.g))
}

/// (ii), first form: whenever members contain `[B, B]` but not `B`, `B`
/// normalizes one of them.
pub fn check_condition_ii_a(
    lattice: &SubgroupLattice,
    family: &AbelianFamily,
) -> Result<ConditionOutcome<NormalizingWitness>> {
    require_family_over(lattice, family)?;
    for b_sub in normal_class_le2_subgroups(lattice) {
        let derived = b_sub.derived_subgroup();
        let offending: Vec<&Group> = family
            .members()
            .iter()
            .filter(|a| derived.is_subgroup_of(a) && !b_sub.is_subgroup_of(a))
            .collect();
        if offending.is_empty() || offending.iter().any(|a| a.is_normalized_by_group(&b_sub)) {
            continue;
        }
        let a = offending[0].clone();
        let b = b_sub.generators().iter().find(|b| !a.is_normalized_by(b)).expect("B does not normalize A").clone();
        return Ok(ConditionOutcome::fail(NormalizingWitness { b_sub, a, b }));
    }
    Ok(ConditionOutcome::pass())
}

/// (ii), second form: replacements `(A ∩ A^b)[A, b]` of offending members
/// stay in the family. The quantifier over `A` follows `quantifier`.
pub fn check_condition_ii_b(
    lattice: &SubgroupLattice,
    family: &AbelianFamily,
    quantifier: Quantifier,
) -> Result<ConditionOutcome<NormalizingWitness>> {
    require_family_over(lattice, family)?;
    let p_group = lattice.group();
    for b_sub in normal_class_le2_subgroups(lattice) {
        let derived = b_sub.derived_subgroup();
        let mut failures = Vec::new();
        let mut offending = 0;
        for a in family.members() {
            if !derived.is_subgroup_of(a) || a.is_normalized_by_group(&b_sub) {
                continue;
            }
            offending += 1;
            for b in replacement_elements(p_group, &b_sub, a)? {
                if !family.contains(&replacement(p_group, &b_sub, a, &b)?) {
                    failures.push(NormalizingWitness { b_sub: b_sub.clone(), a: a.clone(), b });
                    break;
                }
            }
        }
        let violated = match quantifier {
            Quantifier::Universal => !failures.is_empty(),
            Quantifier::Existential => offending > 0 && failures.len() == offending,
        };
        if violated {
            return Ok(ConditionOutcome::fail(failures.swap_remove(0)));
        }
    }
    Ok(ConditionOutcome::pass())
}
