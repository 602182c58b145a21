//! The batch runner: one work item per (group, prime), run concurrently,
//! assembled into a single report document.

use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use fusion_core::criteria::{
    verify_frobenius, verify_glauberman_thompson, verify_np_lemma, verify_replacement, verify_theorem_a,
    verify_theorem_b, verify_zj_normality, Verdict,
};
use fusion_core::{
    is_prime, AbelianFamily, Error, Fault, FamilyKind, FusionContext, Group, LatticeBound, Quantifier, Settings,
    DEFAULT_ELEMENT_LIMIT,
};

use crate::report::{ReportDocument, ReportRecord, Summary, Timing, TOOL_VERSION, VERDICT_ERROR};
use crate::{resolve_group, GroupFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FATAL: i32 = 1;
pub const EXIT_UNMET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AllOdd {
    #[serde(rename = "all-odd")]
    AllOdd,
}

/// `"all-odd"` (odd primes dividing `|G|`) or an explicit list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PrimeSelection {
    AllOdd(AllOdd),
    List(Vec<u64>),
}

impl Default for PrimeSelection {
    fn default() -> Self {
        PrimeSelection::AllOdd(AllOdd::AllOdd)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    AllAbelian,
    #[default]
    MaxAbelian,
    MaxElementaryAbelian,
}

impl FamilyTag {
    pub fn kind(self) -> FamilyKind {
        match self {
            FamilyTag::AllAbelian => FamilyKind::AllAbelian,
            FamilyTag::MaxAbelian => FamilyKind::MaxAbelian,
            FamilyTag::MaxElementaryAbelian => FamilyKind::MaxElementaryAbelian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Frobenius,
    Gt,
    TheoremA,
    TheoremB,
    Zj,
    NpLemma,
    Replacement,
}

impl Check {
    pub const ALL: [Check; 7] =
        [Check::Frobenius, Check::Gt, Check::TheoremA, Check::TheoremB, Check::Zj, Check::NpLemma, Check::Replacement];

    pub fn id(self) -> &'static str {
        match self {
            Check::Frobenius => "frobenius",
            Check::Gt => "gt",
            Check::TheoremA => "theorem-a",
            Check::TheoremB => "theorem-b",
            Check::Zj => "zj",
            Check::NpLemma => "np-lemma",
            Check::Replacement => "replacement",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantifierTag {
    Universal,
    Existential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaultTag {
    BrokenDedup,
    CorruptedFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSpec {
    pub groups: Vec<String>,
    #[serde(default)]
    pub primes: PrimeSelection,
    #[serde(default)]
    pub family: FamilyTag,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantifier: Option<QuantifierTag>,
    /// Deliberate engine defect, for exercising the exit-code contract.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<FaultTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit_order: Option<usize>,
    /// Largest p-exponent of `|P|` the subgroup lattice may reach.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit_lattice: Option<u32>,
}

impl BatchSpec {
    pub fn new(groups: Vec<String>, checks: Vec<Check>) -> BatchSpec {
        BatchSpec {
            groups,
            primes: PrimeSelection::default(),
            family: FamilyTag::default(),
            checks,
            output: None,
            quantifier: None,
            fault: None,
            limit_order: None,
            limit_lattice: None,
        }
    }

    pub fn settings(&self) -> Settings {
        Settings {
            lattice_bound: LatticeBound { max_exponent: self.limit_lattice },
            quantifier: match self.quantifier {
                Some(QuantifierTag::Existential) => Quantifier::Existential,
                _ => Quantifier::Universal,
            },
            fault: self.fault.map(|f| match f {
                FaultTag::BrokenDedup => Fault::BrokenDedup,
                FaultTag::CorruptedFamily => Fault::CorruptedFamily,
            }),
            ..Settings::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct BatchOutcome {
    pub document: ReportDocument,
    pub exit_code: i32,
}

/// Runs every selected check on every (group, prime) item. Input errors
/// (unresolvable groups, even primes) abort before any work with exit 3.
pub fn run_batch(spec: &BatchSpec) -> BatchOutcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let items = match plan(spec, &mut notes) {
        Ok(items) => items,
        Err(message) => {
            notes.push(message);
            return finish(spec, Vec::new(), notes, start, 1);
        }
    };
    let settings = spec.settings();
    let kind = spec.family.kind();
    let reports: Vec<ReportRecord> = items
        .par_iter()
        .map(|item| run_item(item, spec, settings, &kind))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    finish(spec, reports, notes, start, 0)
}

struct Item {
    name: String,
    group: Result<Group, Error>,
    prime: u64,
}

fn plan(spec: &BatchSpec, notes: &mut Vec<String>) -> Result<Vec<Item>, String> {
    if let PrimeSelection::List(primes) = &spec.primes {
        for &p in primes {
            if !is_prime(p) {
                return Err(format!("{p} is not a prime"));
            }
            if p == 2 {
                return Err("the checks require odd primes; 2 was requested".to_string());
            }
        }
    }
    let files: Vec<GroupFile> =
        spec.groups.iter().map(|name| resolve_group(name).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    let limit = spec.limit_order.unwrap_or(DEFAULT_ELEMENT_LIMIT);
    let mut items = Vec::new();
    for file in files {
        let group = file.build_with_limit(limit);
        let order = match &group {
            Ok(g) => g.order() as u64,
            Err(_) => {
                items.push(Item { name: file.name.clone(), group, prime: 0 });
                continue;
            }
        };
        let primes: Vec<u64> = match &spec.primes {
            PrimeSelection::AllOdd(_) => (3..=order).filter(|&p| is_prime(p) && order % p == 0).collect(),
            PrimeSelection::List(list) => list
                .iter()
                .copied()
                .filter(|&p| {
                    let divides = order % p == 0;
                    if !divides {
                        notes.push(format!("{}: p = {p} does not divide |G| = {order}; skipped", file.name));
                    }
                    divides
                })
                .collect(),
        };
        if primes.is_empty() && matches!(spec.primes, PrimeSelection::AllOdd(_)) {
            notes.push(format!("{}: no odd prime divides |G| = {order}; skipped", file.name));
        }
        for p in primes {
            items.push(Item { name: file.name.clone(), group: group.clone(), prime: p });
        }
    }
    Ok(items)
}

fn run_item(item: &Item, spec: &BatchSpec, settings: Settings, kind: &FamilyKind) -> Vec<ReportRecord> {
    let fail = |order: usize, e: &Error| -> Vec<ReportRecord> {
        spec.checks.iter().map(|c| ReportRecord::from_error(&item.name, order, item.prime, c.id(), e)).collect()
    };
    let g = match &item.group {
        Ok(g) => g,
        Err(e) => return fail(0, e),
    };
    let ctx = match FusionContext::new(g, item.prime, settings) {
        Ok(ctx) => ctx,
        Err(e) => return fail(g.order(), &e),
    };
    let family = AbelianFamily::build(ctx.lattice(), kind);
    let mut out = Vec::new();
    for &check in &spec.checks {
        let result = run_check(check, &ctx, &family);
        match result {
            Ok(reports) => {
                out.extend(reports.iter().map(|r| ReportRecord::from_report(&item.name, g.order(), r)));
            }
            Err(e) => out.push(ReportRecord::from_error(&item.name, g.order(), item.prime, check.id(), &e)),
        }
    }
    out
}

fn run_check(
    check: Check,
    ctx: &FusionContext,
    family: &Result<AbelianFamily, Error>,
) -> Result<Vec<fusion_core::criteria::VerificationReport>, Error> {
    let family = || family.as_ref().map_err(Clone::clone);
    Ok(match check {
        Check::Frobenius => vec![verify_frobenius(ctx)?],
        Check::Gt => vec![verify_glauberman_thompson(ctx)?],
        Check::TheoremA => vec![verify_theorem_a(ctx, family()?)?],
        Check::TheoremB => {
            let fam = family()?;
            ctx.strongly_closed_subgroups().iter().map(|d| verify_theorem_b(ctx, fam, d)).collect::<Result<_, _>>()?
        }
        Check::Zj => {
            let fam = family()?;
            let mut out = vec![verify_zj_normality(ctx, fam, None)?];
            for d in ctx.strongly_closed_subgroups() {
                out.push(verify_zj_normality(ctx, fam, Some(&d))?);
            }
            out
        }
        Check::NpLemma => vec![verify_np_lemma(ctx, family()?, None)?],
        Check::Replacement => vec![verify_replacement(ctx.lattice())?],
    })
}

/// Builds the report document and exit code from finished records.
pub fn finish(
    spec: &BatchSpec,
    reports: Vec<ReportRecord>,
    notes: Vec<String>,
    start: Instant,
    input_errors: usize,
) -> BatchOutcome {
    let mut summary = Summary { total: reports.len(), input_errors, ..Summary::default() };
    for r in &reports {
        if r.verdict == Verdict::Confirmed.id() {
            summary.confirmed += 1;
        } else if r.verdict == Verdict::HypothesesUnmet.id() {
            summary.hypotheses_unmet += 1;
        } else if r.verdict == Verdict::Falsified.id() {
            summary.falsified += 1;
        } else if r.verdict == VERDICT_ERROR {
            if r.error.as_ref().is_some_and(|e| e.fatal) {
                summary.fatal_errors += 1;
            } else {
                summary.input_errors += 1;
            }
        }
    }
    summary.exit_code = exit_code(&summary);
    let document = ReportDocument {
        tool_version: TOOL_VERSION.to_string(),
        spec: spec.clone(),
        reports,
        notes,
        summary,
        timing: Timing {
            generated_unix_ms: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis()).unwrap_or(0),
            elapsed_ms: start.elapsed().as_millis(),
        },
    };
    BatchOutcome { exit_code: document.summary.exit_code, document }
}

/// Fatal outcomes dominate input errors, which dominate unmet hypotheses.
pub fn exit_code(summary: &Summary) -> i32 {
    if summary.falsified > 0 || summary.fatal_errors > 0 {
        EXIT_FATAL
    } else if summary.input_errors > 0 {
        EXIT_INPUT
    } else if summary.hypotheses_unmet > 0 {
        EXIT_UNMET
    } else {
        EXIT_OK
    }
}
