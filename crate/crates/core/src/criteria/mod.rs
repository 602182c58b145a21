//! Hypotheses, constructions and theorem verifiers for the nilpotency
//! criteria and the ZJ-type normality results.

pub mod conditions;
pub mod nilpotency;
pub mod replacement;
pub mod stability;
pub mod verify;

pub use conditions::{
    check_condition_i, check_condition_ii_a, check_condition_ii_b, invariance_violated, ConditionOutcome,
    InvarianceWitness, NormalizingWitness,
};
pub use nilpotency::{complement_test, frobenius_quotient_test, is_p_nilpotent};
pub use replacement::{
    check_replacement_properties, replacement, replacement_elements, replacement_maximal, MaximalReplacement,
};
pub use stability::{double_commutator_trivial, is_p_stable, stability_witness, StabilityOutcome};
pub use verify::{
    normal_p_subgroups, verify_frobenius, verify_glauberman_thompson, verify_np_lemma, verify_replacement,
    verify_theorem_a, verify_theorem_b, verify_zj_normality, Claim, ConditionIiVariant, HypothesisReport, Theorem,
    Verdict, VerificationReport,
};
