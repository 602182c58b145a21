use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fusion_cli::batch::{finish, BatchOutcome, BatchSpec, Check, FamilyTag, PrimeSelection, QuantifierTag, EXIT_INPUT};
use fusion_cli::groupfile::parse_perm;
use fusion_cli::report::{ReportDocument, ReportRecord};
use fusion_cli::{resolve_group, run_batch};
use fusion_core::criteria::{
    complement_test, frobenius_quotient_test, is_p_stable, verify_frobenius, verify_glauberman_thompson,
    verify_replacement, verify_theorem_a, verify_theorem_b, verify_zj_normality, VerificationReport,
};
use fusion_core::{
    nilpotency_class, p_core, sylow_subgroup, thompson_j, thompson_zj, AbelianFamily, FusionContext, Group,
    LatticeBound, SubgroupLattice, DEFAULT_ELEMENT_LIMIT,
};

#[derive(Parser)]
#[command(name = "fusion", version, about = "Fusion systems of small permutation groups and checks of p-nilpotency criteria")]
struct Cli {
    /// Largest group order that may be materialized.
    #[arg(long, global = true)]
    limit_order: Option<usize>,
    /// Largest p-exponent of |P| for subgroup lattice enumeration.
    #[arg(long, global = true)]
    limit_lattice: Option<u32>,
    /// Write a JSON report document to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Reading of the quantifier in the replacement-closure condition.
    #[arg(long, global = true, value_enum)]
    strict_quantifier: Option<QuantifierArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantifierArg {
    Universal,
    Existential,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum KindArg {
    AllAbelian,
    MaxAbelian,
    MaxElementaryAbelian,
}

impl From<KindArg> for FamilyTag {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::AllAbelian => FamilyTag::AllAbelian,
            KindArg::MaxAbelian => FamilyTag::MaxAbelian,
            KindArg::MaxElementaryAbelian => FamilyTag::MaxElementaryAbelian,
        }
    }
}

#[derive(Args)]
struct Target {
    /// Catalog name or path to a group file.
    group: String,
    #[arg(short, long)]
    p: u64,
}

#[derive(Args)]
struct FamilyTarget {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value = "max-abelian")]
    kind: KindArg,
}

#[derive(Subcommand)]
enum Command {
    /// Order, generators and Sylow data of a group.
    Info { group: String },
    /// p-nilpotency by fusion, by the Frobenius quotient test and by complements.
    Nilpotency(Target),
    /// p-stability of a group.
    Stability(Target),
    /// Members of an abelian family and its intersection.
    Family(FamilyTarget),
    /// F = F_P(P) iff N_F(I_A) = F_P(P), no closed subgroup.
    CheckA(FamilyTarget),
    /// The strongly closed variant; `auto` runs every strongly closed D.
    CheckB {
        #[command(flatten)]
        family: FamilyTarget,
        /// `auto`, `P`, `1`, or generators separated by `;`.
        #[arg(long, default_value = "auto")]
        closed: String,
    },
    /// Normality of I_A (and of I_A|D for strongly closed D) in G.
    Zj {
        #[command(flatten)]
        family: FamilyTarget,
        /// `none`, `auto`, `P`, `1`, or generators separated by `;`.
        #[arg(long, default_value = "auto")]
        closed: String,
    },
    /// G is p-nilpotent iff N_G(Z(J(P))) is.
    Gt(Target),
    /// Exhaustive scan of the replacement construction in a Sylow subgroup.
    Replacement(Target),
    /// Run a JSON batch specification.
    Batch {
        #[arg(long)]
        spec: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Info { group } => info(cli, group),
        Command::Nilpotency(t) => nilpotency(cli, t),
        Command::Stability(t) => stability(cli, t),
        Command::Family(f) => family(cli, f),
        Command::CheckA(f) => verify(cli, &f.target, Check::TheoremA, f.kind, |ctx, fam| {
            Ok(vec![verify_theorem_a(ctx, fam)?])
        }),
        Command::CheckB { family, closed } => verify(cli, &family.target, Check::TheoremB, family.kind, |ctx, fam| {
            closed_subgroups(ctx, closed, false)?
                .into_iter()
                .map(|d| verify_theorem_b(ctx, fam, &d.expect("closed subgroup")).map_err(Into::into))
                .collect()
        }),
        Command::Zj { family, closed } => verify(cli, &family.target, Check::Zj, family.kind, |ctx, fam| {
            closed_subgroups(ctx, closed, true)?
                .into_iter()
                .map(|d| verify_zj_normality(ctx, fam, d.as_ref()).map_err(Into::into))
                .collect()
        }),
        Command::Gt(t) => verify(cli, t, Check::Gt, KindArg::MaxAbelian, |ctx, _| Ok(vec![verify_glauberman_thompson(ctx)?])),
        Command::Replacement(t) => {
            verify(cli, t, Check::Replacement, KindArg::MaxAbelian, |ctx, _| Ok(vec![verify_replacement(ctx.lattice())?]))
        }
        Command::Batch { spec } => batch(cli, spec),
    }
}

fn limit(cli: &Cli) -> usize {
    cli.limit_order.unwrap_or(DEFAULT_ELEMENT_LIMIT)
}

fn load(cli: &Cli, name: &str) -> Result<(String, Group)> {
    let file = resolve_group(name)?;
    let g = file.build_with_limit(limit(cli)).with_context(|| format!("building {}", file.name))?;
    Ok((file.name, g))
}

fn spec_for(cli: &Cli, group: &str, primes: PrimeSelection, checks: Vec<Check>, kind: FamilyTag) -> BatchSpec {
    let mut spec = BatchSpec::new(vec![group.to_string()], checks);
    spec.primes = primes;
    spec.family = kind;
    spec.limit_order = cli.limit_order;
    spec.limit_lattice = cli.limit_lattice;
    spec.quantifier = cli.strict_quantifier.map(|q| match q {
        QuantifierArg::Universal => QuantifierTag::Universal,
        QuantifierArg::Existential => QuantifierTag::Existential,
    });
    spec
}

fn context(spec: &BatchSpec, g: &Group, p: u64) -> Result<FusionContext> {
    Ok(FusionContext::new(g, p, spec.settings())?)
}

fn info(cli: &Cli, name: &str) -> Result<i32> {
    let (name, g) = load(cli, name)?;
    println!("group    {name}");
    println!("degree   {}", g.degree());
    println!("order    {}", g.order());
    println!("abelian  {}", g.is_abelian());
    for x in g.generators() {
        println!("gen      {x}");
    }
    let order = g.order() as u64;
    let bound = LatticeBound { max_exponent: cli.limit_lattice };
    for p in (2..=order).filter(|&p| fusion_core::is_prime(p) && order.is_multiple_of(p)) {
        let sylow = sylow_subgroup(&g, p)?;
        let core = p_core(&g, p)?;
        print!("p = {p:<3} |P| = {:<5} |O_p(G)| = {:<5}", sylow.order(), core.order());
        match SubgroupLattice::enumerate(&sylow, p, bound) {
            Ok(lattice) => println!(
                " subgroups of P = {:<4} |J(P)| = {:<4} |Z(J(P))| = {:<4} class(P) = {}",
                lattice.len(),
                thompson_j(&lattice).order(),
                thompson_zj(&lattice).order(),
                nilpotency_class(&sylow).map_or("-".to_string(), |c| c.to_string())
            ),
            Err(e) => println!(" lattice: {e}"),
        }
    }
    Ok(0)
}

fn nilpotency(cli: &Cli, t: &Target) -> Result<i32> {
    let spec = spec_for(cli, &t.group, PrimeSelection::List(vec![t.p]), vec![Check::Frobenius], FamilyTag::MaxAbelian);
    let (name, g) = load(cli, &t.group)?;
    let start = Instant::now();
    let ctx = context(&spec, &g, t.p)?;
    println!("fusion nilpotent (morphisms)  {}", ctx.nilpotent_by_morphisms(fusion_core::SubgroupScan::ClassRepresentatives)?);
    println!("fusion nilpotent (automizers) {}", ctx.nilpotent_by_automizers(fusion_core::SubgroupScan::ClassRepresentatives)?);
    println!("Frobenius quotient test       {}", frobenius_quotient_test(&g, t.p, spec.settings().lattice_bound)?);
    println!("normal p-complement           {}", complement_test(&g, t.p)?);
    let reports = vec![verify_frobenius(&ctx)?];
    emit(cli, &spec, &name, &g, &reports, start)
}

fn stability(cli: &Cli, t: &Target) -> Result<i32> {
    let (name, g) = load(cli, &t.group)?;
    let settings = spec_for(cli, &t.group, PrimeSelection::List(vec![t.p]), vec![], FamilyTag::MaxAbelian).settings();
    let out = is_p_stable(&g, t.p, settings.stability, settings.lattice_bound)?;
    println!("{name} p = {}: {}", t.p, if out.stable { "p-stable" } else { "not p-stable" });
    if out.via_shortcut {
        println!("  (abelian Sylow 2-subgroup shortcut)");
    }
    if let Some((q, x)) = out.witness {
        println!("  witness: Q of order {} generated by {}, x = {x}", q.order(), join_gens(&q));
    }
    Ok(0)
}

fn family(cli: &Cli, f: &FamilyTarget) -> Result<i32> {
    let spec = spec_for(cli, &f.target.group, PrimeSelection::List(vec![f.target.p]), vec![], f.kind.into());
    let (name, g) = load(cli, &f.target.group)?;
    let ctx = context(&spec, &g, f.target.p)?;
    let fam = AbelianFamily::build(ctx.lattice(), &spec.family.kind())?;
    println!("{name} p = {} |P| = {} family {} ({} members)", f.target.p, ctx.sylow().order(), fam.label(), fam.len());
    for m in fam.members() {
        println!("  order {:<4} {}", m.order(), join_gens(m));
    }
    let i = fam.meet();
    println!("I_A    order {:<4} {}", i.order(), join_gens(&i));
    println!("Z(J(P)) order {}", thompson_zj(ctx.lattice()).order());
    Ok(0)
}

fn join_gens(g: &Group) -> String {
    if g.generators().is_empty() {
        return "()".to_string();
    }
    g.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// `auto`: every strongly closed subgroup (plus no-D first when `allow_none`).
fn closed_subgroups(ctx: &FusionContext, spec: &str, allow_none: bool) -> Result<Vec<Option<Group>>> {
    Ok(match spec.trim() {
        "auto" => {
            let mut out = if allow_none { vec![None] } else { Vec::new() };
            out.extend(ctx.strongly_closed_subgroups().into_iter().map(Some));
            out
        }
        "none" if allow_none => vec![None],
        "none" => bail!("this check needs a closed subgroup"),
        "P" => vec![Some(ctx.sylow().clone())],
        "1" => vec![Some(Group::trivial(ctx.group().degree()))],
        gens => {
            let degree = ctx.group().degree();
            let perms = gens
                .split(';')
                .map(|s| parse_perm(degree, s.trim()).map_err(anyhow::Error::msg))
                .collect::<Result<Vec<_>>>()?;
            vec![Some(ctx.group().subgroup(&perms)?)]
        }
    })
}

fn verify(
    cli: &Cli,
    t: &Target,
    check: Check,
    kind: KindArg,
    f: impl FnOnce(&FusionContext, &AbelianFamily) -> Result<Vec<VerificationReport>>,
) -> Result<i32> {
    let spec = spec_for(cli, &t.group, PrimeSelection::List(vec![t.p]), vec![check], kind.into());
    let (name, g) = load(cli, &t.group)?;
    let start = Instant::now();
    let ctx = context(&spec, &g, t.p)?;
    let fam = AbelianFamily::build(ctx.lattice(), &spec.family.kind())?;
    let reports = f(&ctx, &fam)?;
    emit(cli, &spec, &name, &g, &reports, start)
}

fn emit(
    cli: &Cli,
    spec: &BatchSpec,
    name: &str,
    g: &Group,
    reports: &[VerificationReport],
    start: Instant,
) -> Result<i32> {
    let records: Vec<ReportRecord> = reports.iter().map(|r| ReportRecord::from_report(name, g.order(), r)).collect();
    let outcome = finish(spec, records, Vec::new(), start, 0);
    print_document(&outcome.document);
    write_report(cli.report.as_deref(), &outcome)?;
    Ok(outcome.exit_code)
}

fn print_document(doc: &ReportDocument) {
    for r in &doc.reports {
        let closed = r.closed_subgroup.as_ref().map_or(String::new(), |d| format!(" D(order {})", d.order));
        println!("{} {} p={}{}: {}", r.theorem, r.group, r.prime, closed, r.verdict);
        if let Some(e) = &r.error {
            println!("  error: {}", e.message);
        }
        if let (Some(l), Some(rh)) = (r.lhs, r.rhs) {
            println!("  lhs = {l}, rhs = {rh}");
        }
        if let Some(h) = &r.hypotheses {
            if !h.all_met {
                let mut unmet = Vec::new();
                if !h.p_odd {
                    unmet.push("p odd".to_string());
                }
                for (label, v) in [
                    ("family abelian", h.family_abelian),
                    ("condition (i)", h.condition_i.as_ref().map(|c| c.holds)),
                    ("condition (ii)", h.condition_ii.as_ref().map(|c| c.holds)),
                    ("D strongly closed", h.strongly_closed_d),
                    ("model condition", h.model_condition),
                    ("p-stable", h.p_stable),
                ] {
                    if v == Some(false) {
                        unmet.push(label.to_string());
                    }
                }
                println!("  unmet: {}", unmet.join(", "));
            }
        }
        for c in &r.claims {
            println!("  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.name);
        }
        for n in &r.notes {
            println!("  note: {n}");
        }
    }
    for n in &doc.notes {
        println!("note: {n}");
    }
    let s = &doc.summary;
    println!(
        "summary: {} reports, {} confirmed, {} hypotheses-unmet, {} FALSIFIED, {} fatal errors, {} input errors; exit {}",
        s.total, s.confirmed, s.hypotheses_unmet, s.falsified, s.fatal_errors, s.input_errors, s.exit_code
    );
}

fn write_report(path: Option<&Path>, outcome: &BatchOutcome) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, outcome.document.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn batch(cli: &Cli, path: &Path) -> Result<i32> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut spec: BatchSpec = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    spec.limit_order = spec.limit_order.or(cli.limit_order);
    spec.limit_lattice = spec.limit_lattice.or(cli.limit_lattice);
    if let Some(q) = cli.strict_quantifier {
        spec.quantifier = Some(match q {
            QuantifierArg::Universal => QuantifierTag::Universal,
            QuantifierArg::Existential => QuantifierTag::Existential,
        });
    }
    let outcome = run_batch(&spec);
    print_document(&outcome.document);
    write_report(cli.report.as_deref().or(spec.output.as_deref()), &outcome)?;
    Ok(outcome.exit_code)
}
