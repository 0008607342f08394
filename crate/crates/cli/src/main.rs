use clap::{Args, Parser, Subcommand};
use hopf_core::fusion::{cached_fusion_table, closure_is_complete, expected_table, inner_faithful_criterion, FusionTable};
use hopf_core::hopf::Family;
use hopf_core::invariants::{default_degree_bound, faithfulness_check, minimal_generators};
use hopf_core::module_algebra::{default_params, standard_action, standard_names, ActionParams};
use hopf_core::reports::{find_case, parse_range, registry, render_table, run_all, CaseResult, Status};
use hopf_core::rep::{irreducible_catalog, RepLabel};
use hopf_core::HopfError;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hopf-reflections", version, about = "Exact checks for semisimple Hopf actions on graded algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// h2n2, b4m, a4m, kp, or group (the group counterpart of --of)
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// With --family group: h2n2, b4m or a4m
    #[arg(long)]
    of: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List the simple modules with their dimensions and module-axiom status
    Irreps {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print the fusion table, optionally comparing it with the closed form
    Fusion {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        check_paper: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide inner-faithfulness of a direct sum of simple modules
    InnerFaithful {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated labels, e.g. pi_1_2 or pi_1^-,T_{1,-1,1}
        #[arg(long)]
        rep: String,
    },
    /// Minimal generators of the fixed ring of a named module algebra
    Invariants {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<i8>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Also test whether every simple module occurs in some degree
        #[arg(long)]
        faithful: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run theorem cases and print a pass/fail table
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
        theorem: Option<String>,
        /// e.g. m=2,4,6 or n=2..5
        #[arg(long, requires = "theorem")]
        range: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Exit 2 for bad input, 1 for a failed check.
enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<HopfError> for Failure {
    fn from(e: HopfError) -> Failure {
        match e {
            HopfError::UnknownName(_)
            | HopfError::ParameterOutOfRange(_)
            | HopfError::LabelOutOfFamily(_)
            | HopfError::CriterionNotApplicable(_)
            | HopfError::NotInnerFaithful(_)
            | HopfError::DegreeBoundTooSmall(_) => Failure::Input(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn resolve(a: &FamilyArgs) -> Result<Family, Failure> {
    let need = |v: Option<u32>, flag: &str| {
        v.ok_or_else(|| Failure::Input(format!("--family {} needs --{flag}", a.family)))
    };
    let base = |name: &str| -> Result<Family, Failure> {
        Ok(match name.to_ascii_lowercase().as_str() {
            "h2n2" => Family::H2n2 { n: need(a.n, "n")? },
            "b4m" => Family::B4m { m: need(a.m, "m")? },
            "a4m" => Family::A4m { m: need(a.m, "m")? },
            "kp" | "h8" => Family::KacPalyutkin,
            "wreath" => Family::Wreath { n: need(a.n, "n")? },
            "d4m" => Family::D4m { m: need(a.m, "m")? },
            "d2mz2" => Family::D2mZ2 { m: need(a.m, "m")? },
            other => return Err(Failure::Input(format!("unknown family {other}"))),
        })
    };
    let f = if a.family.eq_ignore_ascii_case("group") {
        let of = a.of.as_deref().ok_or_else(|| Failure::Input("--family group needs --of".into()))?;
        base(of)?
            .group_counterpart()
            .ok_or_else(|| Failure::Input(format!("{of} has no group counterpart")))?
    } else {
        base(&a.family)?
    };
    f.validate()?;
    Ok(f)
}

fn json_out(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values print"));
}

fn irreps(a: &FamilyArgs, json: bool) -> Outcome {
    let f = resolve(a)?;
    let h = f.build()?;
    let cat = irreducible_catalog(&h)?;
    let rows: Vec<(String, usize, bool)> = cat
        .iter()
        .map(|r| {
            let name = r.label.map(|l| l.name(f)).unwrap_or_else(|| "?".into());
            (name, r.dim(), r.check_is_module().is_ok())
        })
        .collect();
    if json {
        json_out(&serde_json::json!({
            "schema": hopf_core::SCHEMA,
            "family": f.to_string(),
            "dimension": h.dimension,
            "irreducibles": rows.iter().map(|(n, d, ok)| serde_json::json!({"label": n, "dim": d, "module": ok})).collect::<Vec<_>>(),
        }));
    } else {
        let ones = rows.iter().filter(|r| r.1 == 1).count();
        println!("{f}: {} simple modules ({ones} one-dim, {} two-dim), dim H = {}", rows.len(), rows.len() - ones, h.dimension);
        for (n, d, ok) in &rows {
            println!("  {n:<20} dim {d}  {}", if *ok { "module" } else { "NOT A MODULE" });
        }
    }
    if rows.iter().all(|r| r.2) {
        Ok(())
    } else {
        Err(Failure::Mismatch("a catalog entry fails the module axioms".into()))
    }
}

fn print_table(t: &FusionTable) {
    let f = t.family;
    for a in 0..t.len() {
        for b in 0..t.len() {
            let parts: Vec<String> = t
                .product(a, b)
                .into_iter()
                .map(|(l, k)| if k == 1 { l.name(f) } else { format!("{k}{}", l.name(f)) })
                .collect();
            println!("{} x {} = {}", t.labels[a].name(f), t.labels[b].name(f), parts.join(" + "));
        }
    }
}

fn fusion(a: &FamilyArgs, check: bool, json: bool) -> Outcome {
    let f = resolve(a)?;
    let t = cached_fusion_table(f)?;
    if json {
        json_out(&t.to_json());
    } else {
        print_table(&t);
    }
    if !check {
        return Ok(());
    }
    let want = expected_table(f)?;
    let mut bad = 0;
    for x in 0..t.len() {
        for y in 0..t.len() {
            if t.constants[x][y] != want.constants[x][y] {
                bad += 1;
                eprintln!(
                    "mismatch: {} x {}: computed {:?}, closed form {:?}",
                    t.labels[x].name(f),
                    t.labels[y].name(f),
                    t.product(x, y),
                    want.product(x, y)
                );
            }
        }
    }
    let total = t.len() * t.len();
    eprintln!("closed form: {}/{total} ordered pairs agree", total - bad);
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{bad} ordered pairs differ from the closed form")))
    }
}

/// Accepts the printed names plus the underscore shorthand pi_1_2.
fn parse_label(s: &str, f: Family) -> Result<RepLabel, Failure> {
    let s = s.trim();
    if let Ok(l) = RepLabel::parse(s, f) {
        return Ok(l);
    }
    if let Some(rest) = s.strip_prefix("pi_") {
        if let Some((i, j)) = rest.split_once('_') {
            if let Ok(l) = RepLabel::parse(&format!("pi_{{{i},{j}}}"), f) {
                return Ok(l);
            }
        }
    }
    Err(Failure::Input(format!("unknown label {s} for {f}")))
}

/// Splits on commas outside braces.
fn split_labels(s: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().unwrap().push(c);
    }
    out.into_iter().filter(|x| !x.trim().is_empty()).collect()
}

fn criterion_detail(f: Family, v: &[RepLabel]) -> Option<String> {
    let p = f.parameter() as i64;
    let gcd = |a: i64, b: i64| num_gcd(a.abs(), b.abs());
    match (f, v) {
        (Family::KacPalyutkin | Family::H2n2 { .. }, [RepLabel::HTwo { i, j }]) => {
            let e = (*i as i64).pow(2) - (*j as i64).pow(2);
            Some(format!("i^2 - j^2 = {e}, gcd with n = {}", gcd(e, p)))
        }
        (Family::B4m { .. }, [RepLabel::Two { i }]) => Some(format!("gcd(i, 2m) = {}", gcd(*i as i64, 2 * p))),
        (Family::A4m { .. }, [RepLabel::TwoEps { i, eps }, ..]) => {
            Some(format!("gcd(i, m) = {}, eps = {eps}", gcd(*i as i64, p)))
        }
        _ => None,
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn inner_faithful(a: &FamilyArgs, rep: &str) -> Outcome {
    let f = resolve(a)?;
    let labels: Vec<RepLabel> = split_labels(rep).iter().map(|s| parse_label(s, f)).collect::<Result<_, _>>()?;
    if labels.is_empty() {
        return Err(Failure::Input("--rep is empty".into()));
    }
    let t = cached_fusion_table(f)?;
    let closure = closure_is_complete(&labels, &t)?;
    let names: Vec<String> = labels.iter().map(|l| l.name(f)).collect();
    println!("{f}: V = {}", names.join(" + "));
    if let Some(d) = criterion_detail(f, &labels) {
        println!("criterion input: {d}");
    }
    let rule = match inner_faithful_criterion(f, &labels) {
        Ok(b) => Some(b),
        Err(HopfError::CriterionNotApplicable(_)) => None,
        Err(e) => return Err(e.into()),
    };
    match rule {
        Some(b) => println!("criterion verdict: {b}"),
        None => println!("criterion verdict: not applicable"),
    }
    println!("tensor-power closure: {}", if closure { "all simple modules" } else { "proper subring" });
    println!("inner-faithful: {closure}");
    match rule {
        Some(b) if b != closure => Err(Failure::Mismatch("criterion and closure disagree".into())),
        _ => Ok(()),
    }
}

#[allow(clippy::too_many_arguments)]
fn invariants(
    a: &FamilyArgs,
    algebra: &str,
    i: Option<u32>,
    j: Option<u32>,
    eps: Option<i8>,
    max_degree: Option<usize>,
    faithful: bool,
    json: bool,
) -> Outcome {
    let f = resolve(a)?;
    let h = f.build()?;
    if !standard_names(f).iter().any(|n| n == algebra) {
        return Err(Failure::Input(format!(
            "unknown algebra {algebra} for {f}; expected one of {}",
            standard_names(f).join(", ")
        )));
    }
    let d = default_params(f);
    let params = ActionParams { i: i.unwrap_or(d.i), j: j.unwrap_or(d.j), eps: eps.unwrap_or(d.eps) };
    let spec = standard_action(&h, algebra, params)?;
    if !spec.inner_faithful {
        return Err(Failure::Input(format!(
            "{algebra} with {params:?} is not inner-faithful for {f}"
        )));
    }
    let bound = max_degree.unwrap_or_else(|| default_degree_bound(h.dimension));
    let mut report = minimal_generators(&spec, bound)?;
    if faithful {
        report.faithful = Some(faithfulness_check(&spec, bound)?);
    }
    if json {
        json_out(&report.to_json());
        return Ok(());
    }
    println!("{algebra} on {f}, i={} j={} eps={}, degree bound {bound}", params.i, params.j, params.eps);
    let degrees: Vec<String> = report.sorted_degrees().iter().map(|x| x.to_string()).collect();
    println!("degrees {{{}}}, product {}, dim H {}", degrees.join(","), report.product_of_degrees(), h.dimension);
    println!("certificate: {}", report.certificate.name());
    for g in &report.generators {
        println!("  degree {:>3}: {}", g.degree, g.display);
    }
    let prefix: Vec<String> = report.hilbert_prefix.iter().map(|x| x.to_string()).collect();
    println!("hilbert prefix: {}", prefix.join(" "));
    if let Some(b) = report.faithful {
        println!("faithful through degree {bound}: {b}");
    }
    Ok(())
}

fn verify(theorem: Option<&str>, range: Option<&str>, all: bool, list: bool, json: bool) -> Outcome {
    if list {
        for c in registry() {
            let range = match c.parameter {
                Some(p) => {
                    let v: Vec<String> = c.default_range.iter().map(|x| x.to_string()).collect();
                    format!("{p}={}", v.join(","))
                }
                None => "-".into(),
            };
            println!("{:<32} {:<16} {}", c.id, range, c.checks);
        }
        return Ok(());
    }
    let rows: Vec<CaseResult> = if all {
        run_all()
    } else {
        let case = find_case(theorem.unwrap_or_default())?;
        let values = match range {
            Some(r) => Some(parse_range(r, case.parameter)?),
            None => None,
        };
        case.run(values.as_deref())
    };
    if json {
        json_out(&serde_json::json!({ "schema": hopf_core::SCHEMA, "results": rows }));
    } else {
        print!("{}", render_table(&rows));
    }
    let fails = rows.iter().filter(|r| r.status == Status::Fail).count();
    let passes = rows.iter().filter(|r| r.status == Status::Pass).count();
    let skips = rows.len() - fails - passes;
    eprintln!("{passes} passed, {fails} failed, {skips} skipped");
    if fails == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{fails} checks failed")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Irreps { family, json } => irreps(family, *json),
        Command::Fusion { family, check_paper, json } => fusion(family, *check_paper, *json),
        Command::InnerFaithful { family, rep } => inner_faithful(family, rep),
        Command::Invariants { family, algebra, i, j, eps, max_degree, faithful, json } => {
            invariants(family, algebra, *i, *j, *eps, *max_degree, *faithful, *json)
        }
        Command::Verify { theorem, range, all, list, json } => {
            verify(theorem.as_deref(), range.as_deref(), *all, *list, *json)
        }
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
    }
}
