//! Command-line front end: argument parsing, check runners and report
//! rendering. The `saxl` binary is a thin wrapper around [`main_with`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::cache::{self, Cache};
use crate::classical::{
    getallfamily_check, gsaxl_c_with, gsaxl_check_d, induction_identity_check, lemma48_check, GsaxlReport,
    DIRECT_PATH_MAX_N, GSAXL_C_DEFAULT_BOUND, GSAXL_D_DEFAULT_BOUND, LEMMA48_DEFAULT_BOUND,
};
use crate::error::{Error, Result};
use crate::exact::appendix::{
    f4_negative_control, verify_family_square, verify_spinor_tensor, AppendixReport, TableSource,
};
use crate::exact::dihedral::{closed_form_table, conjecture_check, cross_validate};
use crate::exact::labels::label_characters;
use crate::exact::noncrystal::{dihedral_campaign, good_family_noncrystallographic, h3_check, min_omega_constituents};
use crate::exact::pin::analyze;
use crate::exact::GroupName;
use crate::orbit::{
    closure_leq, collapse, d_map_partition, is_self_dual, is_solvable, is_special, jm_weight, minimal_solvable,
    Numeral, OrbitLabel, OrbitType,
};
use crate::partition::Partition;
use crate::report::{render_json, render_markdown, Provenance, Report, Status, Table};
use crate::symbols::{families, family_id, special_character_of_orbit, SymbolType};
use crate::symmetric::{
    saxl_check, square_containment, tensorprod_decompose_check, ContainmentReport, SAXL_DEFAULT_BOUND,
    SAXL_FULL_TABLE_MAX_K,
};

/// Largest k for the family-exhaustion check without an explicit bound.
pub const GETALLFAMILY_DEFAULT_BOUND: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "saxl", version, about = "Exact tensor-square checks for Weyl and Coxeter groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value = "markdown", global = true)]
    pub format: Format,
    /// Allow long-running computations (the H4 Pin cover).
    #[arg(long, global = true)]
    pub stretch: bool,
    /// Override the desk-scale bound of the selected check.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Cache directory (defaults to $SAXL_CACHE_DIR or the user cache dir).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the table cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tensor square of the staircase character of S_n, n = k(k+1)/2.
    CheckA {
        #[arg(long)]
        k: usize,
        /// Also decompose χ^λ ⊗ χ^λ ⊗ (sum of two-row characters) for this λ.
        #[arg(long)]
        tensor_lambda: Option<Partition>,
    },
    /// Family tensor square in W(C_{k(k+1)}) or W(D_{k²}).
    Gsaxl {
        #[arg(long = "type")]
        ty: OrbitType,
        #[arg(long)]
        k: usize,
    },
    /// Constituents of σ_(λ,∅) ⊗ ΛV against the explicit family.
    Getallfamily {
        #[arg(long = "type")]
        ty: OrbitType,
        #[arg(long)]
        k: usize,
    },
    /// Families of W(B_n), W(C_n) or W(D_n) by symbols.
    Families {
        #[arg(long = "type")]
        ty: OrbitType,
        #[arg(long)]
        n: usize,
        /// Only the family of the special character of this orbit partition.
        #[arg(long)]
        of_orbit: Option<Partition>,
    },
    /// Nilpotent orbit queries.
    Orbit {
        #[command(subcommand)]
        query: OrbitQuery,
    },
    /// Family tensor squares of the exceptional and H-type groups.
    Exceptional {
        #[arg(long)]
        group: GroupName,
        /// Fail on any difference from the golden table.
        #[arg(long)]
        verify_appendix: bool,
    },
    /// Labelled character table of a reflection group.
    Chartab {
        #[arg(long)]
        group: GroupName,
    },
    /// Pin cover: genuine characters, Ω scalars and spinor tensors.
    Pin {
        #[arg(long)]
        group: GroupName,
        #[arg(long)]
        spinor_tensor: bool,
    },
    /// Closed-form dihedral tables, family check and cross-validation.
    Dihedral {
        #[arg(long, conflicts_with = "from")]
        n: Option<u32>,
        #[arg(long, requires = "to")]
        from: Option<u32>,
        #[arg(long)]
        to: Option<u32>,
    },
    /// Run the built-in verification campaign.
    Selftest {
        /// Only run checks whose name contains this string.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrbitQuery {
    /// Largest partition of the type dominated by the given one.
    Collapse {
        #[arg(long = "type")]
        ty: OrbitType,
        #[arg(long)]
        partition: Partition,
    },
    /// Image under the order-reversing duality.
    Dmap {
        #[arg(long = "type")]
        ty: OrbitType,
        #[arg(long)]
        partition: Partition,
        /// I or II for very even type D partitions.
        #[arg(long)]
        numeral: Option<String>,
    },
    /// Closure order between two orbits, e.g. --a C:4,2 --b C:3,3.
    Closure {
        #[arg(long)]
        a: OrbitLabel,
        #[arg(long)]
        b: OrbitLabel,
    },
    /// Whether the orbit has solvable centralizer.
    Solvable {
        #[arg(long)]
        orbit: OrbitLabel,
    },
    /// Minimal solvable orbit of the given type and rank.
    Minimal {
        #[arg(long = "type")]
        ty: OrbitType,
        #[arg(long)]
        n: usize,
    },
}

/// Resolved run configuration.
#[derive(Clone, Debug)]
pub struct Context {
    pub stretch: bool,
    pub bound: Option<usize>,
    pub cache: Option<Cache>,
}

impl Context {
    pub fn from_opts(g: &GlobalOpts) -> Self {
        let cache = (!g.no_cache).then(|| Cache::new(g.cache_dir.clone().unwrap_or_else(Cache::default_dir)));
        Context { stretch: g.stretch, bound: g.bound, cache }
    }

    fn bound(&self, what: &'static str, value: usize, default: usize) -> Result<()> {
        let bound = self.bound.unwrap_or(default);
        if value > bound {
            return Err(Error::BoundExceeded { what, value, bound });
        }
        Ok(())
    }
}

fn big_table(title: &str, rows: impl IntoIterator<Item = (String, String)>) -> Table {
    let mut t = Table::new(title, &["m"]);
    for (l, m) in rows {
        t.push(l, vec![m]);
    }
    t
}

fn containment_report(check: &str, r: &ContainmentReport, require_all: bool) -> Report {
    let passed = if require_all || r.full { r.missing.is_empty() } else { r.hook_complete };
    let scope = if r.full { "every irreducible" } else { "hooks only" };
    Report::new(check, format!("S_{} λ={}", r.n, r.lambda), passed)
        .note(format!("{} characters examined ({scope}), {} missing", r.multiplicities.len(), r.missing.len()))
        .note(format!("hook complete: {}", r.hook_complete))
        .table(big_table("multiplicities", r.multiplicities.iter().map(|(p, m)| (p.to_string(), m.to_string()))))
        .with_data(r)
}

pub fn run_check_a(ctx: &Context, k: usize, tensor_lambda: Option<&Partition>) -> Result<Vec<Report>> {
    ctx.bound("k", k, SAXL_DEFAULT_BOUND)?;
    let lambda = Partition::staircase(k as u32);
    let n = lambda.size();
    let mut out = Vec::new();
    let table = if k <= SAXL_FULL_TABLE_MAX_K { Some(cache::sn_table(ctx.cache.as_ref(), n)?) } else { None };
    let r = match &table {
        Some(t) => square_containment(t, &lambda)?,
        None => saxl_check(k, ctx.bound.unwrap_or(SAXL_DEFAULT_BOUND))?,
    };
    out.push(containment_report("check-a", &r, false));
    if let Some(mu) = tensor_lambda {
        let m = mu.size();
        let t = if m == n && table.is_some() {
            table.clone().expect("checked")
        } else {
            cache::sn_table(ctx.cache.as_ref(), m)?
        };
        let r = tensorprod_decompose_check(mu, Some(&t))?;
        out.push(containment_report("two-row-tensor", &r, true));
    }
    Ok(out)
}

fn gsaxl_report(r: &GsaxlReport) -> Report {
    let mut rep = Report::new("gsaxl", format!("{} k={}", r.group, r.k), r.passed());
    if let Some(s) = &r.skipped {
        rep.status = Status::Skipped;
        return rep.note(s.clone()).with_data(r);
    }
    rep.note(format!("family of {} characters", r.family.len()))
        .note(format!("missing: {}", if r.missing.is_empty() { "none".into() } else { r.missing.join(" ") }))
        .note(format!("every ΛⁱV⊗ΛʲV constituent present: {}", r.exterior_constituents_present))
        .table(big_table("multiplicities", r.multiplicities.iter().map(|(l, m)| (l.clone(), m.to_string()))))
        .with_data(r)
}

pub fn run_gsaxl(ctx: &Context, ty: OrbitType, k: usize) -> Result<Report> {
    let r = match ty {
        OrbitType::C => {
            ctx.bound("k", k, GSAXL_C_DEFAULT_BOUND)?;
            let t = cache::bc_table(ctx.cache.as_ref(), k * (k + 1))?;
            gsaxl_c_with(&t, k)?
        }
        OrbitType::D => gsaxl_check_d(k, ctx.bound.unwrap_or(GSAXL_D_DEFAULT_BOUND))?,
        other => return Err(Error::UnsupportedGroup(format!("type {other}: use C or D"))),
    };
    Ok(gsaxl_report(&r))
}

pub fn run_getallfamily(ctx: &Context, ty: OrbitType, k: usize) -> Result<Report> {
    ctx.bound("k", k, GETALLFAMILY_DEFAULT_BOUND)?;
    let r = getallfamily_check(ty, k, DIRECT_PATH_MAX_N)?;
    let mut t = Table::new("constituents of σ_(λ,∅) ⊗ ΛV", &["LR", "direct"]);
    for (chi, m) in &r.lr {
        let direct = r.direct.as_ref().map(|d| d.get(chi).copied().unwrap_or(0).to_string()).unwrap_or("-".into());
        t.push(chi.to_string(), vec![m.to_string(), direct]);
    }
    let paths = match r.paths_agree {
        Some(b) => b.to_string(),
        None => "direct path not run".into(),
    };
    Ok(Report::new("getallfamily", format!("type {ty} k={k} (n={}, λ={})", r.n, r.lambda), r.passed())
        .note(format!("constituents equal the family ({} members): {}", r.family.len(), r.constituents_match_family))
        .note(format!("every multiplicity 1: {}", r.all_multiplicity_one))
        .note(format!("LR and direct paths agree: {paths}"))
        .note(format!("strict expansion witnesses valid: {}", r.witnesses_valid))
        .table(t)
        .with_data(&r))
}

pub fn run_families(ty: OrbitType, n: usize, of_orbit: Option<&Partition>) -> Result<Report> {
    let sty = SymbolType::of(ty)?;
    let mut fams = families(sty, n);
    let mut rep = Report::new("families", format!("W({ty}_{n})"), true);
    if let Some(p) = of_orbit {
        let numeral = (ty == OrbitType::D && crate::orbit::is_very_even(p)).then_some(Numeral::I);
        let o = OrbitLabel::new(ty, p.clone(), numeral)?;
        let chi = special_character_of_orbit(&o)?;
        let id = family_id(&chi, sty);
        fams.retain(|f| f.id == id);
        rep = rep.note(format!("special character of {o}: {chi}"));
    }
    let mut t = Table::new("families", &["members"]);
    for f in &fams {
        let members: Vec<String> =
            f.members.iter().map(|m| if f.special.contains(m) { format!("{m}*") } else { m.to_string() }).collect();
        t.push(f.id.digest(), vec![members.join(" ")]);
    }
    Ok(rep.note(format!("{} families (* marks special characters)", fams.len())).table(t).with_data(&fams))
}

pub fn run_orbit(q: &OrbitQuery) -> Result<Report> {
    let (subject, result, data) = match q {
        OrbitQuery::Collapse { ty, partition } => {
            let c = collapse(partition, *ty)?;
            (format!("{ty}-collapse of {partition}"), c.to_string(), serde_json::json!({ "collapse": c }))
        }
        OrbitQuery::Dmap { ty, partition, numeral } => {
            let num = match numeral.as_deref() {
                None => None,
                Some("I") => Some(Numeral::I),
                Some("II") => Some(Numeral::II),
                Some(s) => return Err(Error::Parse(format!("numeral {s:?}: expected I or II"))),
            };
            let d = d_map_partition(partition, *ty, num)?;
            let shown = match d.numeral {
                Some(n) => format!("{}:{n}", d.partition),
                None => d.partition.to_string(),
            };
            (format!("d({ty}:{partition})"), shown, serde_json::json!({ "orbit": d.to_string() }))
        }
        OrbitQuery::Closure { a, b } => {
            let d = closure_leq(a, b)?;
            (format!("{a} vs {b}"), d.to_string(), serde_json::json!({ "relation": d.to_string() }))
        }
        OrbitQuery::Solvable { orbit } => {
            let s = is_solvable(orbit);
            let data = serde_json::json!({
                "solvable": s,
                "special": is_special(orbit),
                "selfDual": is_self_dual(orbit),
                "jmWeight": jm_weight(orbit),
            });
            (orbit.to_string(), s.to_string(), data)
        }
        OrbitQuery::Minimal { ty, n } => {
            let o = minimal_solvable(*ty, *n)?;
            let data = serde_json::json!({ "orbit": o.to_string(), "jmWeight": jm_weight(&o) });
            (format!("minimal solvable orbit, type {ty} rank {n}"), o.to_string(), data)
        }
    };
    Ok(Report::new("orbit", subject, true).note(result).with_data(&data))
}

fn appendix_report(check: &str, r: &AppendixReport, strict: bool) -> Report {
    let mut rep = Report::new(check, r.group.clone(), !strict || r.passed());
    if r.source == TableSource::GoldenData {
        rep.provenance = Provenance::GoldenData;
    }
    if r.mismatches.is_empty() && r.problems.is_empty() {
        rep = rep.note(format!("{} rows, no differences", r.rows.len()));
    }
    for m in &r.mismatches {
        rep =
            rep.note(format!("MISMATCH {} [{}]: expected {}, computed {}", m.label, m.column, m.expected, m.computed));
    }
    for p in &r.problems {
        rep = rep.note(format!("PROBLEM {p}"));
    }
    for n in &r.notes {
        rep = rep.note(n.clone());
    }
    let cols: Vec<&str> = r.columns.iter().map(String::as_str).collect();
    let mut t = Table::new(r.kind.clone(), &cols);
    for (l, v) in &r.rows {
        t.push(l.clone(), v.iter().map(|m| m.to_string()).collect());
    }
    rep.table(t).with_data(r)
}

pub fn run_exceptional(name: GroupName, strict: bool) -> Result<Vec<Report>> {
    let mut out = vec![appendix_report("family-square", &verify_family_square(name)?, strict)];
    if name == GroupName::F4 {
        let nc = f4_negative_control()?;
        out.push(
            Report::new("negative-control", "F4", !strict || nc.passed())
                .note(format!("characters missing from the square: {}", nc.missing_computed.join(" ")))
                .note(format!("rows printed with multiplicity 0: {}", nc.missing_printed.join(" ")))
                .with_data(&nc),
        );
    }
    Ok(out)
}

pub fn run_chartab(ctx: &Context, name: GroupName) -> Result<Report> {
    let (g, t) = cache::reflection_table(ctx.cache.as_ref(), name)?;
    let lt = label_characters(&g, t)?;
    let columns: Vec<String> = g.group.classes().iter().map(|c| format!("{}/{}", c.order, c.size)).collect();
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut tab = Table::new("characters by class (order/size)", &cols);
    let mut chars = Vec::new();
    for i in lt.sorted_rows() {
        let values: Vec<String> = lt.table.rows[i].iter().map(|v| v.to_text()).collect();
        chars.push(serde_json::json!({ "label": lt.labels[i].to_string(), "values": values }));
        tab.push(lt.labels[i].to_string(), values);
    }
    let unresolved: Vec<Vec<String>> =
        lt.unresolved.iter().map(|g| g.iter().map(|&i| lt.labels[i].to_string()).collect()).collect();
    let data = serde_json::json!({
        "group": name.to_string(),
        "order": lt.table.order.to_string(),
        "classes": g.group.classes().iter().map(|c| serde_json::json!({
            "order": c.order, "size": c.size.to_string(), "word": g.group.word(c.representative),
        })).collect::<Vec<_>>(),
        "characters": chars,
        "unresolvedPrimes": unresolved,
    });
    let mut rep = Report::new("chartab", name.to_string(), true)
        .note(format!("|W| = {}, {} classes", lt.table.order, lt.labels.len()))
        .table(tab)
        .with_data(&data);
    for u in &unresolved {
        rep = rep.note(format!("prime labels not fixed intrinsically: {}", u.join(", ")));
    }
    Ok(rep)
}

pub fn run_pin(ctx: &Context, name: GroupName, spinor_tensor: bool) -> Result<Vec<Report>> {
    if matches!(name, GroupName::E6 | GroupName::E7 | GroupName::E8) {
        if !spinor_tensor {
            return Err(Error::UnsupportedGroup(format!("{name}: Pin covers are built for rank ≤ 4 only")));
        }
        return Ok(vec![appendix_report("spinor-tensor", &verify_spinor_tensor(name)?, true)]);
    }
    if name == GroupName::H4 && !ctx.stretch {
        return Err(Error::GroupTooLarge { order: 2 * name.order(), cap: 2 * GroupName::F4.order() });
    }
    let mut p = analyze(name, ctx.stretch)?;
    crate::exact::appendix::apply_label_pins(&mut p)?;
    let min = p.min_omega(true);
    let mut t = Table::new("genuine characters", &["dim", "Ωw", "Ω", "spinor"]);
    for (j, g) in p.genuine.iter().enumerate() {
        let mark = if min.contains(&j) { " (min)" } else { "" };
        t.push(
            format!("χ̃#{}{mark}", g.index),
            vec![g.dim.to_string(), g.omega_weighted_exact.clone(), g.omega_exact.clone(), g.is_spinor.to_string()],
        );
    }
    let omega_ok = p.genuine.iter().all(|g| g.omega_weighted > 0.0 && g.omega > 0.0);
    let mut out = vec![Report::new("pin", name.to_string(), omega_ok)
        .note(format!("|W̃| = {}, {} genuine characters", p.cover.group.order(), p.genuine.len()))
        .note(format!("𝒮 ⊗ 𝒮 = (ΛV)^{}", p.exterior_power))
        .note(format!("Ω scalars positive: {omega_ok}"))
        .table(t)
        .with_data(&p.genuine)];
    if spinor_tensor {
        if matches!(name, GroupName::G2 | GroupName::F4) {
            out.push(appendix_report("spinor-tensor", &verify_spinor_tensor(name)?, true));
        } else {
            let c = min_omega_constituents(&p);
            out.push(
                Report::new("spinor-tensor", name.to_string(), true)
                    .table(big_table("⊕ σ̃⊗𝒮 over Min(Ω)", c.iter().map(|(l, m)| (l.to_string(), m.to_string()))))
                    .with_data(&c.iter().map(|(l, m)| (l.to_string(), *m)).collect::<Vec<_>>()),
            );
        }
    }
    Ok(out)
}

pub fn run_dihedral_one(n: u32) -> Result<Vec<Report>> {
    let t = closed_form_table(n)?;
    let columns: Vec<String> = t.columns.iter().map(|c| c.to_string()).collect();
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut tab = Table::new("closed-form table of the double cover", &cols);
    for (l, row) in &t.rows {
        tab.push(l.to_string(), row.iter().map(|v| v.to_text()).collect());
    }
    let c = conjecture_check(n)?;
    let mut out = vec![Report::new("dihedral", format!("I2({n})"), c.passed())
        .note(format!("good family is F0: {}", c.good_family_is_f0))
        .note(format!("product rule holds: {}", c.product_rule_holds))
        .table(tab)
        .table(big_table("(⊕_{σ∈F0} σ)^⊗2", c.square.iter().map(|(l, m)| (l.clone(), m.to_string()))))
        .with_data(&c)];
    let x = cross_validate(n)?;
    out.push(
        Report::new("dihedral-cross-validation", format!("I2({n})"), x.passed())
            .note(format!("engine Min(Ω): {}", x.engine_min_omega.join(" ")))
            .note(format!("printed Min(Ω): {}", x.printed_min_omega.join(" ")))
            .note(format!("engine spinor: {}, printed spinor: {}", x.engine_spinor.join(" "), x.printed_spinor))
            .note(format!("f_α1 replaced by z·f_α1: {}", x.f1_sign_flipped))
            .with_data(&x),
    );
    Ok(out)
}

pub fn run_dihedral_range(from: u32, to: u32) -> Result<Report> {
    let c = dihedral_campaign(from..=to, from..=to)?;
    let fails: Vec<String> = c.conjecture_failures.iter().map(|n| n.to_string()).collect();
    let fails = if fails.is_empty() { "none".to_string() } else { fails.join(" ") };
    Ok(Report::new("dihedral-campaign", format!("I2(n), {from} ≤ n ≤ {to}"), c.passed())
        .note(format!("family check on {} groups, failures: {fails}", c.conjecture_checked.len()))
        .note(format!(
            "closed form = engine for {} groups",
            c.cross_validated.len() - c.cross_validation_failures.len()
        ))
        .with_data(&c))
}

type Check = (&'static str, Box<dyn Fn(&Context) -> Result<Vec<Report>> + Send + Sync>);

fn one(r: Result<Report>) -> Result<Vec<Report>> {
    r.map(|r| vec![r])
}

/// The built-in campaign in declaration order.
pub fn selftest_checks() -> Vec<Check> {
    let mut v: Vec<Check> = Vec::new();
    for k in 2..=5 {
        v.push(("check-a", Box::new(move |c| run_check_a(c, k, None))));
    }
    for name in
        [GroupName::G2, GroupName::F4, GroupName::E6, GroupName::E7, GroupName::E8, GroupName::H3, GroupName::H4]
    {
        v.push(("family-square", Box::new(move |_| run_exceptional(name, true))));
    }
    for name in [GroupName::G2, GroupName::F4, GroupName::E6, GroupName::E7, GroupName::E8] {
        v.push((
            "spinor-tensor",
            Box::new(move |_| one(Ok(appendix_report("spinor-tensor", &verify_spinor_tensor(name)?, true)))),
        ));
    }
    for name in [GroupName::G2, GroupName::F4, GroupName::H3, GroupName::I2(5), GroupName::I2(8)] {
        v.push(("pin", Box::new(move |c| run_pin(c, name, false))));
    }
    v.push((
        "pin-h4",
        Box::new(|c| {
            if c.stretch {
                let r = good_family_noncrystallographic(GroupName::H4, true)?;
                Ok(vec![Report::new("pin-h4", "H4", r.passed).with_data(&r)])
            } else {
                let mut r = Report::new("pin-h4", "H4", true).note("needs --stretch");
                r.status = Status::Skipped;
                Ok(vec![r])
            }
        }),
    ));
    v.push((
        "h3-tables",
        Box::new(|_| {
            let r = h3_check()?;
            one(Ok(Report::new("h3-tables", "H3", r.passed()).with_data(&r)))
        }),
    ));
    v.push(("dihedral-campaign", Box::new(|_| one(run_dihedral_range(3, 30)))));
    for k in 1..=4 {
        v.push(("getallfamily", Box::new(move |c| one(run_getallfamily(c, OrbitType::C, k)))));
        v.push(("getallfamily", Box::new(move |c| one(run_getallfamily(c, OrbitType::D, k)))));
    }
    v.push(("gsaxl", Box::new(|c| one(run_gsaxl(c, OrbitType::C, 1)))));
    v.push(("gsaxl", Box::new(|c| one(run_gsaxl(c, OrbitType::D, 2)))));
    for n in 1..=6 {
        v.push((
            "lemma48",
            Box::new(move |_| {
                let r = lemma48_check(n, LEMMA48_DEFAULT_BOUND)?;
                one(Ok(Report::new("lemma48", format!("W(C_{n})"), r.mismatches.is_empty())
                    .note(format!("{} triples, {} mismatches", r.triples_checked, r.mismatches.len()))
                    .with_data(&r)))
            }),
        ));
    }
    for k in 1..=2 {
        v.push((
            "induction",
            Box::new(move |_| {
                let r = induction_identity_check(k, 3)?;
                one(Ok(Report::new("induction", format!("W(C_{})", r.n), r.passed()).with_data(&r)))
            }),
        ));
    }
    v
}

pub fn run_selftest(ctx: &Context, only: Option<&str>) -> Vec<Report> {
    let checks: Vec<Check> =
        selftest_checks().into_iter().filter(|(name, _)| only.is_none_or(|o| name.contains(o))).collect();
    let results: Vec<Vec<Report>> = checks
        .par_iter()
        .map(|(name, f)| match f(ctx) {
            Ok(r) => r,
            Err(e) => vec![Report::new(name, "error", false).note(e.to_string())],
        })
        .collect();
    results.into_iter().flatten().collect()
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Result<Vec<Report>> {
    let ctx = Context::from_opts(&cli.global);
    match &cli.command {
        Command::CheckA { k, tensor_lambda } => run_check_a(&ctx, *k, tensor_lambda.as_ref()),
        Command::Gsaxl { ty, k } => one(run_gsaxl(&ctx, *ty, *k)),
        Command::Getallfamily { ty, k } => one(run_getallfamily(&ctx, *ty, *k)),
        Command::Families { ty, n, of_orbit } => one(run_families(*ty, *n, of_orbit.as_ref())),
        Command::Orbit { query } => one(run_orbit(query)),
        Command::Exceptional { group, verify_appendix } => run_exceptional(*group, *verify_appendix),
        Command::Chartab { group } => one(run_chartab(&ctx, *group)),
        Command::Pin { group, spinor_tensor } => run_pin(&ctx, *group, *spinor_tensor),
        Command::Dihedral { n, from, to } => match (n, from, to) {
            (Some(n), _, _) => run_dihedral_one(*n),
            (None, Some(a), Some(b)) => one(run_dihedral_range(*a, *b)),
            _ => Err(Error::Parse("dihedral needs --n or --from/--to".into())),
        },
        Command::Selftest { only } => Ok(run_selftest(&ctx, only.as_deref())),
    }
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => render_json(reports),
        Format::Markdown => render_markdown(reports),
    }
}

/// Parses `args`, runs, prints, and returns the process exit code: 0 when
/// every check passes, 1 on a failed check, 2 on an error.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(reports) => {
            print!("{}", render(&reports, cli.global.format));
            if reports.iter().all(Report::passed) {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
