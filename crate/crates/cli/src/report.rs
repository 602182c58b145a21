//! Serializable report records. Field order is the serialization order.

use serde::{Deserialize, Serialize};

use fusion_core::criteria::{
    ConditionIiVariant, ConditionOutcome, HypothesisReport, InvarianceWitness, NormalizingWitness,
    VerificationReport,
};
use fusion_core::{Error, Group};

use crate::batch::BatchSpec;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub order: usize,
    pub generators: Vec<String>,
}

impl From<&Group> for SubgroupRecord {
    fn from(g: &Group) -> Self {
        SubgroupRecord { order: g.order(), generators: g.generators().iter().map(|x| x.to_string()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub subgroup: SubgroupRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member: Option<SubgroupRecord>,
    pub element: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRecord {
    pub holds: bool,
    pub witness: Option<WitnessRecord>,
}

impl From<&ConditionOutcome<InvarianceWitness>> for ConditionRecord {
    fn from(c: &ConditionOutcome<InvarianceWitness>) -> Self {
        ConditionRecord {
            holds: c.holds,
            witness: c.witness.as_ref().map(|w| WitnessRecord {
                subgroup: (&w.q).into(),
                member: None,
                element: w.g.to_string(),
            }),
        }
    }
}

impl From<&ConditionOutcome<NormalizingWitness>> for ConditionRecord {
    fn from(c: &ConditionOutcome<NormalizingWitness>) -> Self {
        ConditionRecord {
            holds: c.holds,
            witness: c.witness.as_ref().map(|w| WitnessRecord {
                subgroup: (&w.b_sub).into(),
                member: Some((&w.a).into()),
                element: w.b.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesRecord {
    pub p_odd: bool,
    pub family_abelian: Option<bool>,
    pub condition_i: Option<ConditionRecord>,
    pub condition_ii_variant: Option<String>,
    pub condition_ii: Option<ConditionRecord>,
    pub strongly_closed_d: Option<bool>,
    pub model_condition: Option<bool>,
    pub p_stable: Option<bool>,
    pub all_met: bool,
}

impl From<&HypothesisReport> for HypothesesRecord {
    fn from(h: &HypothesisReport) -> Self {
        HypothesesRecord {
            p_odd: h.p_odd,
            family_abelian: h.family_abelian,
            condition_i: h.condition_i.as_ref().map(Into::into),
            condition_ii_variant: h.condition_ii_variant.map(|v| match v {
                ConditionIiVariant::A => "A".to_string(),
                ConditionIiVariant::B => "B".to_string(),
            }),
            condition_ii: h.condition_ii.as_ref().map(Into::into),
            strongly_closed_d: h.strongly_closed_d,
            model_condition: h.model_condition,
            p_stable: h.p_stable,
            all_met: h.all_met(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub group: String,
    pub order: usize,
    pub prime: u64,
    pub theorem: String,
    pub family: Option<String>,
    pub closed_subgroup: Option<SubgroupRecord>,
    pub hypotheses: Option<HypothesesRecord>,
    pub lhs: Option<bool>,
    pub rhs: Option<bool>,
    pub claims: Vec<ClaimRecord>,
    /// `confirmed`, `hypotheses-unmet`, `FALSIFIED` or `error`.
    pub verdict: String,
    pub error: Option<ErrorRecord>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    /// Engine defect (exit 1) rather than an input or size problem (exit 3).
    pub fatal: bool,
    pub message: String,
}

pub const VERDICT_ERROR: &str = "error";

impl ReportRecord {
    pub fn from_report(group: &str, order: usize, r: &VerificationReport) -> ReportRecord {
        ReportRecord {
            group: group.to_string(),
            order,
            prime: r.prime,
            theorem: r.theorem.id().to_string(),
            family: r.family.clone(),
            closed_subgroup: r.closed_subgroup.as_ref().map(Into::into),
            hypotheses: Some((&r.hypotheses).into()),
            lhs: r.lhs,
            rhs: r.rhs,
            claims: r.claims.iter().map(|c| ClaimRecord { name: c.name.clone(), holds: c.holds }).collect(),
            verdict: r.verdict.id().to_string(),
            error: None,
            notes: r.notes.clone(),
        }
    }

    pub fn from_error(group: &str, order: usize, prime: u64, theorem: &str, e: &Error) -> ReportRecord {
        ReportRecord {
            group: group.to_string(),
            order,
            prime,
            theorem: theorem.to_string(),
            family: None,
            closed_subgroup: None,
            hypotheses: None,
            lhs: None,
            rhs: None,
            claims: Vec::new(),
            verdict: VERDICT_ERROR.to_string(),
            error: Some(ErrorRecord { fatal: is_fatal(e), message: e.to_string() }),
            notes: Vec::new(),
        }
    }
}

/// Errors that signal a broken engine rather than bad input.
pub fn is_fatal(e: &Error) -> bool {
    matches!(e, Error::MethodDisagreement { .. } | Error::PropertyFailure(_))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub confirmed: usize,
    pub hypotheses_unmet: usize,
    pub falsified: usize,
    pub fatal_errors: usize,
    pub input_errors: usize,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub generated_unix_ms: u128,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub spec: BatchSpec,
    pub reports: Vec<ReportRecord>,
    pub notes: Vec<String>,
    pub summary: Summary,
    /// The only nondeterministic key.
    pub timing: Timing,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
