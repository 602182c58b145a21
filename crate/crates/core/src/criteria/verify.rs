//! Theorem verifiers producing [`VerificationReport`]s.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::auto::{automorphisms, is_characteristic, DEFAULT_AUTOMORPHISM_BUDGET};
use crate::error::{Error, Result};
use crate::fusion::FusionContext;
use crate::group::Group;
use crate::lattice::{normal_class_le2_subgroups, thompson_zj, AbelianFamily, SubgroupLattice};
use crate::settings::Fault;
use crate::sylow::{p_core, p_log};

use super::conditions::{
    check_condition_i, check_condition_ii_a, check_condition_ii_b, ConditionOutcome, InvarianceWitness,
    NormalizingWitness,
};
use super::nilpotency::{complement_test, frobenius_quotient_test, is_p_nilpotent};
use super::replacement::{replacement, replacement_elements, replacement_maximal};
use super::stability::is_p_stable;

/// Groups at most this large get the brute-force `Aut(G)` clause.
pub const CHARACTERISTIC_CLAUSE_MAX_ORDER: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Theorem {
    Frobenius,
    GlaubermanThompson,
    TheoremA,
    TheoremB,
    ZjNormality,
    NpLemma,
    Replacement,
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::Frobenius => "frobenius",
            Theorem::GlaubermanThompson => "gt",
            Theorem::TheoremA => "theorem-a",
            Theorem::TheoremB => "theorem-b",
            Theorem::ZjNormality => "zj",
            Theorem::NpLemma => "np-lemma",
            Theorem::Replacement => "replacement",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    HypothesesUnmet,
    Falsified,
}

impl Verdict {
    pub fn id(&self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::HypothesesUnmet => "hypotheses-unmet",
            Verdict::Falsified => "FALSIFIED",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionIiVariant {
    /// `B` normalizes one of the members containing `[B, B]` but not `B`.
    A,
    /// Replacements of offending members stay in the family.
    B,
}

/// Status of each hypothesis a verifier evaluated; `None` means not applicable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HypothesisReport {
    pub p_odd: bool,
    pub family_abelian: Option<bool>,
    pub condition_i: Option<ConditionOutcome<InvarianceWitness>>,
    pub condition_ii_variant: Option<ConditionIiVariant>,
    pub condition_ii: Option<ConditionOutcome<NormalizingWitness>>,
    pub strongly_closed_d: Option<bool>,
    pub model_condition: Option<bool>,
    pub p_stable: Option<bool>,
}

impl HypothesisReport {
    pub fn all_met(&self) -> bool {
        self.p_odd
            && self.family_abelian != Some(false)
            && self.condition_i.as_ref().is_none_or(|c| c.holds)
            && self.condition_ii.as_ref().is_none_or(|c| c.holds)
            && self.strongly_closed_d != Some(false)
            && self.model_condition != Some(false)
            && self.p_stable != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub prime: u64,
    pub family: Option<String>,
    /// The strongly closed subgroup `D`, for the variants that take one.
    pub closed_subgroup: Option<Group>,
    pub hypotheses: HypothesisReport,
    pub lhs: Option<bool>,
    pub rhs: Option<bool>,
    pub claims: Vec<Claim>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(theorem: Theorem, prime: u64) -> VerificationReport {
        VerificationReport {
            theorem,
            prime,
            family: None,
            closed_subgroup: None,
            hypotheses: HypothesisReport { p_odd: prime % 2 == 1, ..HypothesisReport::default() },
            lhs: None,
            rhs: None,
            claims: Vec::new(),
            verdict: Verdict::HypothesesUnmet,
            notes: Vec::new(),
        }
    }

    /// Unmet hypotheses win; otherwise `lhs ⇔ rhs` and every claim must hold.
    fn decide(mut self) -> VerificationReport {
        self.verdict = if !self.hypotheses.all_met() {
            Verdict::HypothesesUnmet
        } else if self.lhs != self.rhs || self.claims.iter().any(|c| !c.holds) {
            Verdict::Falsified
        } else {
            Verdict::Confirmed
        };
        self
    }

    fn claim(&mut self, name: impl Into<String>, holds: bool) {
        self.claims.push(Claim { name: name.into(), holds });
    }
}

/// `F = F_P(P)` against two p-nilpotency tests; any disagreement among the
/// four computations is an error.
pub fn verify_frobenius(ctx: &FusionContext) -> Result<VerificationReport> {
    let (g, p) = (ctx.group(), ctx.prime());
    let fusion = ctx.is_nilpotent()?;
    let frobenius = frobenius_quotient_test(g, p, ctx.settings().lattice_bound)?;
    let complement = complement_test(g, p)?;
    if fusion != frobenius || fusion != complement {
        return Err(Error::MethodDisagreement {
            check: "Frobenius triple",
            detail: format!("fusion {fusion}, quotient {frobenius}, complement {complement}"),
        });
    }
    let mut report = VerificationReport::new(Theorem::Frobenius, p);
    report.hypotheses.p_odd = true;
    report.lhs = Some(fusion);
    report.rhs = Some(complement);
    Ok(report.decide())
}

/// `G` is p-nilpotent iff `N_G(Z(J(P)))` is.
pub fn verify_glauberman_thompson(ctx: &FusionContext) -> Result<VerificationReport> {
    let (g, p, bound) = (ctx.group(), ctx.prime(), ctx.settings().lattice_bound);
    let mut report = VerificationReport::new(Theorem::GlaubermanThompson, p);
    let zj = thompson_zj(ctx.lattice());
    let n = g.normalizer(&zj)?;
    report.lhs = Some(is_p_nilpotent(g, p, bound)?);
    report.rhs = Some(is_p_nilpotent(&n, p, bound)?);
    report.notes.push(format!("|Z(J(P))| = {}, |N_G(Z(J(P)))| = {}", zj.order(), n.order()));
    Ok(report.decide())
}

fn nilpotency_of_normalizer(ctx: &FusionContext, i: &Group) -> Result<Option<bool>> {
    if !i.is_normalized_by_group(ctx.sylow()) {
        return Ok(None);
    }
    ctx.normalizer_system(i)?.is_nilpotent().map(Some)
}

/// `F = F_P(P)` iff `N_F(I_𝒜) = F_P(P)`, under (i) and (ii) in its first form.
pub fn verify_theorem_a(ctx: &FusionContext, family: &AbelianFamily) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Theorem::TheoremA, ctx.prime());
    report.family = Some(String::from(family.label()));
    let h = &mut report.hypotheses;
    h.family_abelian = Some(family.members().iter().all(Group::is_abelian));
    h.condition_i = Some(check_condition_i(ctx, family)?);
    h.condition_ii_variant = Some(ConditionIiVariant::A);
    h.condition_ii = Some(check_condition_ii_a(ctx.lattice(), family)?);
    let i = family.meet();
    report.lhs = Some(ctx.is_nilpotent()?);
    report.rhs = nilpotency_of_normalizer(ctx, &i)?;
    report.notes.push(format!("|I| = {}", i.order()));
    Ok(report.decide())
}

/// `F = F_P(P)` iff `N_F(I_{𝒜|D}) = F_P(P)` for strongly closed `D`, under
/// (i) and (ii) in its replacement form.
pub fn verify_theorem_b(ctx: &FusionContext, family: &AbelianFamily, d: &Group) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Theorem::TheoremB, ctx.prime());
    report.family = Some(String::from(family.label()));
    report.closed_subgroup = Some(d.clone());
    let h = &mut report.hypotheses;
    h.family_abelian = Some(family.members().iter().all(Group::is_abelian));
    h.strongly_closed_d = Some(ctx.is_strongly_closed(d)?);
    h.condition_i = Some(check_condition_i(ctx, family)?);
    h.condition_ii_variant = Some(ConditionIiVariant::B);
    h.condition_ii = Some(check_condition_ii_b(ctx.lattice(), family, ctx.settings().quantifier)?);
    let i = family.restrict(d)?.meet();
    report.lhs = Some(ctx.is_nilpotent()?);
    report.rhs = nilpotency_of_normalizer(ctx, &i)?;
    report.notes.push(format!("|D| = {}, |I| = {}", d.order(), i.order()));
    Ok(report.decide())
}

fn corrupted(ctx: &FusionContext, family: &AbelianFamily) -> AbelianFamily {
    let lattice = ctx.lattice();
    let bad = (0..lattice.len()).find(|&i| !lattice.is_normal(i) && lattice.get(i).generators().len() == 1);
    match bad {
        Some(i) => family.with_members(alloc::vec![lattice.get(i).clone()], "corrupted"),
        None => family.clone(),
    }
}

/// Normal p-subgroups of `G`: the subgroups of `O_p(G)` normal in `G`.
pub fn normal_p_subgroups(ctx: &FusionContext) -> Result<Vec<Group>> {
    let (g, p) = (ctx.group(), ctx.prime());
    let core = p_core(g, p)?;
    let lattice = SubgroupLattice::enumerate(&core, p, ctx.settings().lattice_bound)?;
    Ok(lattice.subgroups().iter().filter(|b| b.is_normal_in(g)).cloned().collect())
}

/// Normality in `G` of `I_𝒜` (no `D`), or of `I_{𝒜|D}` and each
/// `I_{𝒜|D} ∩ B` for normal p-subgroups `B` (with `D`), under the model
/// condition, p-stability and (i)/(ii).
pub fn verify_zj_normality(
    ctx: &FusionContext,
    family: &AbelianFamily,
    d: Option<&Group>,
) -> Result<VerificationReport> {
    let (g, p, settings) = (ctx.group(), ctx.prime(), *ctx.settings());
    let mut report = VerificationReport::new(Theorem::ZjNormality, p);
    report.family = Some(String::from(family.label()));
    report.closed_subgroup = d.cloned();
    let h = &mut report.hypotheses;
    h.family_abelian = Some(family.members().iter().all(Group::is_abelian));
    h.model_condition = Some(ctx.model_condition()?);
    h.p_stable = Some(is_p_stable(g, p, settings.stability, settings.lattice_bound)?.stable);
    h.condition_i = Some(check_condition_i(ctx, family)?);
    match d {
        None => {
            h.condition_ii_variant = Some(ConditionIiVariant::A);
            h.condition_ii = Some(check_condition_ii_a(ctx.lattice(), family)?);
        }
        Some(d) => {
            h.strongly_closed_d = Some(ctx.is_strongly_closed(d)?);
            h.condition_ii_variant = Some(ConditionIiVariant::B);
            h.condition_ii = Some(check_condition_ii_b(ctx.lattice(), family, settings.quantifier)?);
        }
    }
    if !report.hypotheses.all_met() {
        return Ok(report.decide());
    }
    let family = match settings.fault {
        Some(Fault::CorruptedFamily) => corrupted(ctx, family),
        _ => family.clone(),
    };
    match d {
        None => {
            let i = family.meet();
            report.claim("I_A normal in G", i.is_normal_in(g));
            characteristic_clause(ctx, &i, &mut report);
        }
        Some(d) => {
            let i = family.restrict(d)?.meet();
            report.claim("I_A|D normal in G", i.is_normal_in(g));
            for b in normal_p_subgroups(ctx)? {
                let meet = g.meet(&i, &b)?;
                report.claim(format!("I_A|D meet B normal in G (|B| = {})", b.order()), meet.is_normal_in(g));
            }
        }
    }
    let mut report = report.decide();
    if report.claims.iter().all(|c| c.holds) {
        report.lhs = Some(true);
        report.rhs = Some(true);
    }
    Ok(report)
}

fn characteristic_clause(ctx: &FusionContext, i: &Group, report: &mut VerificationReport) {
    let (g, sylow) = (ctx.group(), ctx.sylow());
    if g.order() > CHARACTERISTIC_CLAUSE_MAX_ORDER {
        report.notes.push(String::from("characteristic clause skipped: |G| above the Aut(G) limit"));
        return;
    }
    let (Some(aut_p), Some(aut_g)) =
        (automorphisms(sylow, DEFAULT_AUTOMORPHISM_BUDGET), automorphisms(g, DEFAULT_AUTOMORPHISM_BUDGET))
    else {
        report.notes.push(String::from("characteristic clause skipped: automorphism search over budget"));
        return;
    };
    if is_characteristic(sylow, i, &aut_p) {
        report.claim("I_A characteristic in G", is_characteristic(g, i, &aut_g));
    } else {
        report.notes.push(String::from("I_A not characteristic in P; characteristic clause vacuous"));
    }
}

/// `N_G(I)` p-nilpotent ⇔ `G` p-nilpotent, with `I = I_𝒜` or `I_{𝒜|D}`.
pub fn verify_np_lemma(ctx: &FusionContext, family: &AbelianFamily, d: Option<&Group>) -> Result<VerificationReport> {
    let (g, p, settings) = (ctx.group(), ctx.prime(), *ctx.settings());
    let mut report = VerificationReport::new(Theorem::NpLemma, p);
    report.family = Some(String::from(family.label()));
    report.closed_subgroup = d.cloned();
    let h = &mut report.hypotheses;
    h.family_abelian = Some(family.members().iter().all(Group::is_abelian));
    h.condition_i = Some(check_condition_i(ctx, family)?);
    let i = match d {
        None => {
            h.condition_ii_variant = Some(ConditionIiVariant::A);
            h.condition_ii = Some(check_condition_ii_a(ctx.lattice(), family)?);
            family.meet()
        }
        Some(d) => {
            h.strongly_closed_d = Some(ctx.is_strongly_closed(d)?);
            h.condition_ii_variant = Some(ConditionIiVariant::B);
            h.condition_ii = Some(check_condition_ii_b(ctx.lattice(), family, settings.quantifier)?);
            family.restrict(d)?.meet()
        }
    };
    if !report.hypotheses.all_met() {
        return Ok(report.decide());
    }
    report.lhs = Some(is_p_nilpotent(g, p, settings.lattice_bound)?);
    report.rhs = Some(is_p_nilpotent(&g.normalizer(&i)?, p, settings.lattice_bound)?);
    Ok(report.decide())
}

/// Exhaustive replacement scan over `P`: existence of `b`, the four
/// properties of every `A*`, and termination of the maximal iteration.
pub fn verify_replacement(lattice: &SubgroupLattice) -> Result<VerificationReport> {
    let p_group = lattice.group();
    let p = lattice.prime();
    let mut report = VerificationReport::new(Theorem::Replacement, p);
    let mut pairs = 0usize;
    let mut triples = 0usize;
    let mut existence = true;
    let mut termination = true;
    for b_sub in normal_class_le2_subgroups(lattice) {
        if p == 2 && !b_sub.is_abelian() {
            continue;
        }
        let derived = b_sub.derived_subgroup();
        let bound = p_log(b_sub.order() as u64, p).unwrap_or(0) as usize;
        for a in lattice.abelian_subgroups() {
            if !derived.is_subgroup_of(a) || a.is_normalized_by_group(&b_sub) {
                continue;
            }
            pairs += 1;
            let elements = replacement_elements(p_group, &b_sub, a)?;
            if elements.is_empty() {
                existence = false;
                continue;
            }
            for b in &elements {
                replacement(p_group, &b_sub, a, b)?;
                triples += 1;
            }
            let max = replacement_maximal(p_group, &b_sub, a)?;
            if max.steps > bound || !max.result.is_normalized_by_group(&b_sub) || max.result.order() != a.order() {
                termination = false;
            }
        }
    }
    report.lhs = Some(true);
    report.rhs = Some(true);
    report.claim("b exists whenever B does not normalize A", existence);
    report.claim(format!("properties (i)-(iv) on {triples} triples"), true);
    report.claim("maximal replacement normalized within log_p|B| steps", termination);
    report.notes.push(format!("{pairs} (B, A) pairs, {triples} (B, A, b) triples"));
    Ok(report.decide())
}
