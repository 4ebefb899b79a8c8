//! Command-line front end: flag parsing, the builtin example corpus, report
//! assembly, and the exit-code policy.
//!
//! Exit codes: 0 for a clean run, 1 when a mathematical consistency check
//! fails (the computation contradicts itself or a formula misses its
//! oracle), 2 for unusable input.

pub mod corpus;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use codepth3::classtable::{
    admissible, bass_series, fg_polys, poincare_series, ClasstableError,
};
use codepth3::galg::appendix::Formula;
use codepth3::galg::GalgError;
use codepth3::growth::{exception_kind, growth_verdict, GrowthError};
use codepth3::koszul::{classify_presentation, KoszulError, RingPresentation};
use codepth3::report::{Item, Report};
use codepth3::resolve::{verify_formula, zoo_algebras, FormulaCheck, ResolveError};
use codepth3::{ClassId, FieldSpec, Fp, Rat, RationalSeries, RingInvariants};

const WINDOW_ENV: &str = "CODEPTH3_WINDOW";

#[derive(Parser)]
#[command(
    name = "codepth3",
    version,
    about = "Exact Bass and Poincare series, Koszul homology classification, \
             and Bass-number growth certificates for local rings of embedding \
             codepth at most three"
)]
pub struct Cli {
    /// Render a human-readable table instead of the machine report
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Closed-form Poincare and Bass series for a class and invariants
    Series(SeriesArgs),
    /// Classify a graded quotient presentation from a file or a builtin example
    Classify(ClassifyArgs),
    /// Check catalog formulas against brute-force minimal resolutions
    Verify(VerifyArgs),
    /// Bass-number growth certificate over a degree window
    Growth(GrowthArgs),
    /// List the builtin example presentations
    Examples,
}

/// Class selection and ring invariants shared by `series` and `growth`.
#[derive(Args)]
pub struct ClassArgs {
    /// Class name: C, S, T, B, G, or H (or inline forms like "H(2,1)")
    #[arg(long)]
    pub class: String,
    /// Codepth parameter for class C
    #[arg(long)]
    pub c: Option<u32>,
    /// Row parameter for class G
    #[arg(long)]
    pub r: Option<u32>,
    /// First parameter for class H
    #[arg(long)]
    pub p: Option<u32>,
    /// Second parameter for class H
    #[arg(long)]
    pub q: Option<u32>,
    /// Rank of A_1 minus one
    #[arg(long)]
    pub l: Option<i64>,
    /// Rank of A_3
    #[arg(long)]
    pub n: Option<u32>,
    /// Embedding dimension; defaults to the codepth of the class
    #[arg(long)]
    pub e: Option<u32>,
    /// Depth; defaults to e minus the codepth
    #[arg(long)]
    pub d: Option<u32>,
    /// Cohen-Macaulay defect; defaults to the least admissible value
    #[arg(long)]
    pub h: Option<u32>,
}

#[derive(Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    /// Top degree of the Betti and Bass coefficient tables
    #[arg(long, env = WINDOW_ENV, default_value_t = 10)]
    pub window: i64,
}

#[derive(Args)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    /// Number of growth steps to certify
    #[arg(long, env = WINDOW_ENV, default_value_t = 12)]
    pub window: usize,
}

#[derive(Args)]
pub struct ClassifyArgs {
    /// Presentation file in the `ring v1` format
    #[arg(conflicts_with = "example")]
    pub file: Option<PathBuf>,
    /// Builtin example name; see the `examples` command
    #[arg(long)]
    pub example: Option<String>,
    /// Internal-degree window for the homology computation
    #[arg(long, env = WINDOW_ENV)]
    pub window: Option<i64>,
    /// Krull dimension hint, trusted as exact
    #[arg(long)]
    pub dim: Option<u32>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Catalog formula name
    #[arg(long, conflicts_with = "all")]
    pub formula: Option<String>,
    /// Run the whole catalog
    #[arg(long)]
    pub all: bool,
    /// Comparison degree for each fixture
    #[arg(long, env = WINDOW_ENV, default_value_t = 8)]
    pub degree: i64,
    /// Coefficient field: 0 for the rationals, an odd prime otherwise
    #[arg(long, default_value_t = 10007)]
    pub field: u64,
    /// Print the structure constants of one fixture algebra instead of
    /// running checks
    #[arg(long, conflicts_with_all = ["formula", "all"])]
    pub dump_fixture: Option<String>,
}

/// Failure category; decides the process exit code.
#[derive(Debug)]
pub enum CmdError {
    /// Unusable flags, files, or invariant tuples.
    Input(String),
    /// A hard consistency check failed during the computation.
    Math(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Input(_) => 2,
            CmdError::Math(_) => 1,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Input(m) | CmdError::Math(m) => f.write_str(m),
        }
    }
}

fn input(msg: impl ToString) -> CmdError {
    CmdError::Input(msg.to_string())
}

fn map_classtable(e: ClasstableError) -> CmdError {
    match &e {
        ClasstableError::EquivalenceViolation(_) | ClasstableError::Series(_) => {
            CmdError::Math(e.to_string())
        }
        _ => CmdError::Input(e.to_string()),
    }
}

fn map_galg(e: GalgError) -> CmdError {
    match e {
        GalgError::BadUnit(_)
        | GalgError::NotCommutative(_)
        | GalgError::OddSquare(_)
        | GalgError::NotAssociative(_)
        | GalgError::BadAction(_)
        | GalgError::BadMultidegree(_)
        | GalgError::Series(_) => CmdError::Math(e.to_string()),
        GalgError::Classtable(t) => map_classtable(t),
        _ => CmdError::Input(e.to_string()),
    }
}

fn map_koszul(e: KoszulError) -> CmdError {
    match e {
        KoszulError::InternalInconsistency(_) | KoszulError::Series(_) => {
            CmdError::Math(e.to_string())
        }
        KoszulError::Algebra(g) => map_galg(g),
        KoszulError::Table(t) => map_classtable(t),
        _ => CmdError::Input(e.to_string()),
    }
}

fn map_growth(e: GrowthError) -> CmdError {
    match e {
        GrowthError::GrowthViolation { .. }
        | GrowthError::OrderMismatch { .. }
        | GrowthError::Series(_) => CmdError::Math(e.to_string()),
        GrowthError::Classtable(t) => map_classtable(t),
        _ => CmdError::Input(e.to_string()),
    }
}

fn map_resolve(e: ResolveError) -> CmdError {
    match e {
        ResolveError::Galg(g) => map_galg(g),
        ResolveError::Koszul(k) => map_koszul(k),
        _ => CmdError::Math(e.to_string()),
    }
}

/// A finished command: the report plus whether any soft consistency check
/// inside it failed (which exits 1 even though the report was produced).
pub struct CmdOutput {
    pub report: Report,
    pub math_failure: bool,
}

fn done(report: Report) -> Result<CmdOutput, CmdError> {
    Ok(CmdOutput { report, math_failure: false })
}

pub fn run(cli: &Cli) -> Result<CmdOutput, CmdError> {
    match &cli.command {
        Command::Series(a) => cmd_series(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Growth(a) => cmd_growth(a),
        Command::Examples => cmd_examples(),
    }
}

fn resolve_class(a: &ClassArgs) -> Result<ClassId, CmdError> {
    let s = a.class.trim();
    let params: [(&str, bool); 4] = [
        ("--c", a.c.is_some()),
        ("--r", a.r.is_some()),
        ("--p", a.p.is_some()),
        ("--q", a.q.is_some()),
    ];
    let allow = |allowed: &[&str]| -> Result<(), CmdError> {
        for (name, given) in params {
            if given && !allowed.contains(&name) {
                return Err(input(format!("class {s} does not take {name}")));
            }
        }
        Ok(())
    };
    let cls = if s.len() == 1 {
        match s.chars().next().unwrap().to_ascii_uppercase() {
            'C' => {
                allow(&["--c"])?;
                ClassId::C(a.c.ok_or_else(|| input("class C needs --c (its codepth, 0..=3)"))?)
            }
            'G' => {
                allow(&["--r"])?;
                ClassId::G(a.r.ok_or_else(|| input("class G needs --r"))?)
            }
            'H' => {
                allow(&["--p", "--q"])?;
                ClassId::H(
                    a.p.ok_or_else(|| input("class H needs --p"))?,
                    a.q.ok_or_else(|| input("class H needs --q"))?,
                )
            }
            'S' => {
                allow(&[])?;
                ClassId::S
            }
            'T' => {
                allow(&[])?;
                ClassId::T
            }
            'B' => {
                allow(&[])?;
                ClassId::B
            }
            _ => return Err(input(format!("unknown class {s:?}; expected C, S, T, B, G, or H"))),
        }
    } else {
        allow(&[])?;
        ClassId::from_str(&s.to_ascii_uppercase()).map_err(map_classtable)?
    };
    cls.validate().map_err(map_classtable)?;
    Ok(cls)
}

fn resolve_invariants(cls: ClassId, a: &ClassArgs) -> Result<RingInvariants, CmdError> {
    let c = cls.codepth();
    let (e, d) = match (a.e, a.d) {
        (None, None) => (c, 0),
        (Some(e), None) => {
            if e < c {
                return Err(input(format!("--e {e} is below the codepth {c} of {cls}")));
            }
            (e, e - c)
        }
        (None, Some(d)) => (c + d, d),
        (Some(e), Some(d)) => {
            if e < d || e - d != c {
                return Err(input(format!(
                    "--e {e} and --d {d} give codepth {}, but {cls} has codepth {c}",
                    e as i64 - d as i64
                )));
            }
            (e, d)
        }
    };
    let (l, n) = match cls {
        ClassId::C(cc) => {
            if a.l.is_some() || a.n.is_some() {
                return Err(input(format!("{cls} determines l and n; drop --l and --n")));
            }
            (cc as i64 - 1, u32::from(cc == 3))
        }
        ClassId::S => {
            let l = a.l.ok_or_else(|| input("class S needs --l"))?;
            if a.n.unwrap_or(0) != 0 {
                return Err(input("class S has n = 0; drop --n"));
            }
            (l, 0)
        }
        _ => (
            a.l.ok_or_else(|| input(format!("class {cls} needs --l")))?,
            a.n.ok_or_else(|| input(format!("class {cls} needs --n")))?,
        ),
    };
    let build = |h: u32| -> Result<RingInvariants, ClasstableError> {
        let base = RingInvariants::for_class(cls, h, l, n)?;
        RingInvariants::new(e, d, h, base.l, base.m, base.n, base.p, base.q, base.r)
    };
    let admit = |inv: RingInvariants| -> Result<RingInvariants, CmdError> {
        let verdict = admissible(cls, &inv);
        if verdict.ok {
            Ok(inv)
        } else {
            Err(map_classtable(ClasstableError::InadmissibleInvariants {
                class: cls.to_string(),
                violations: verdict.violations,
            }))
        }
    };
    match a.h {
        Some(h) => admit(build(h).map_err(map_classtable)?),
        None => {
            let mut last = input("no admissible Cohen-Macaulay defect");
            for h in 0..=c {
                match build(h) {
                    Ok(inv) => match admit(inv) {
                        Ok(inv) => return Ok(inv),
                        Err(e) => last = e,
                    },
                    Err(e) => last = map_classtable(e),
                }
            }
            Err(last)
        }
    }
}

fn echo_invariants(rep: &mut Report, cls: ClassId, inv: &RingInvariants) {
    rep.text("class", cls);
    for (k, v) in [
        ("e", inv.e as i64),
        ("d", inv.d as i64),
        ("h", inv.h as i64),
        ("l", inv.l),
        ("m", inv.m as i64),
        ("n", inv.n as i64),
        ("p", inv.p as i64),
        ("q", inv.q as i64),
        ("r", inv.r as i64),
    ] {
        rep.int(k, v);
    }
}

pub fn cmd_series(a: &SeriesArgs) -> Result<CmdOutput, CmdError> {
    let cls = resolve_class(&a.class)?;
    let inv = resolve_invariants(cls, &a.class)?;
    if a.window < 0 {
        return Err(input(format!("--window {} must be nonnegative", a.window)));
    }
    let (f, g) = fg_polys(cls, &inv, false).map_err(map_classtable)?;
    let poincare = poincare_series(cls, &inv, false).map_err(map_classtable)?;
    let bass = bass_series(cls, &inv, false).map_err(map_classtable)?;
    let fg = RationalSeries::new(f, g).map_err(|e| CmdError::Math(e.to_string()))?;

    let mut rep = Report::new("series");
    rep.input("class", cls)
        .input("e", inv.e)
        .input("d", inv.d)
        .input("h", inv.h)
        .input("l", inv.l)
        .input("n", inv.n)
        .input("window", a.window);
    echo_invariants(&mut rep, cls, &inv);
    rep.series("fg", &fg);
    rep.series("poincare", &poincare);
    rep.series("bass", &bass);
    rep.taylor("betti", 0, poincare.taylor(0, a.window));
    rep.taylor("mu", 0, bass.taylor(0, a.window));
    let exc = exception_kind(cls, &inv);
    rep.flag("plateau", exc.is_some());
    if let Some(kind) = exc {
        rep.text("exception", kind);
    }
    done(rep)
}

pub fn cmd_growth(a: &GrowthArgs) -> Result<CmdOutput, CmdError> {
    let cls = resolve_class(&a.class)?;
    let inv = resolve_invariants(cls, &a.class)?;
    let verdict = growth_verdict(cls, &inv, a.window).map_err(map_growth)?;

    let mut rep = Report::new("growth");
    rep.input("class", cls)
        .input("e", inv.e)
        .input("d", inv.d)
        .input("h", inv.h)
        .input("l", inv.l)
        .input("n", inv.n)
        .input("window", a.window);
    echo_invariants(&mut rep, cls, &inv);
    rep.int("window", a.window as i64);
    rep.taylor("mu", verdict.d as i64, verdict.mu.clone());
    let steps: String =
        verdict.strict.iter().map(|&strict| if strict { '<' } else { '=' }).collect();
    rep.text("steps", steps);
    rep.flag("exception", verdict.exception.is_some());
    if let Some(kind) = verdict.exception {
        rep.text("exception_kind", kind);
    }
    rep.rational(
        "gamma",
        verdict.gamma_window.numer().clone(),
        verdict.gamma_window.denom().clone(),
    );
    rep.text("gamma_label", "window bound");
    done(rep)
}

pub fn cmd_classify(a: &ClassifyArgs) -> Result<CmdOutput, CmdError> {
    let (source, pres) = match (&a.file, &a.example) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
            (path.display().to_string(), RingPresentation::parse(&text).map_err(map_koszul)?)
        }
        (None, Some(name)) => {
            let ex = corpus::find(name).ok_or_else(|| {
                let names: Vec<&str> = corpus::EXAMPLES.iter().map(|e| e.name).collect();
                input(format!("unknown example {name:?}; builtin: {}", names.join(", ")))
            })?;
            (format!("example:{name}"), ex.presentation())
        }
        (None, None) => {
            return Err(input("classify needs a presentation file or --example NAME"))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects file together with --example"),
    };
    let window = a.window.unwrap_or_else(|| pres.default_window());
    let report = classify_presentation(&pres, Some(window), a.dim).map_err(map_koszul)?;

    let mut rep = Report::new("classify");
    rep.input("source", source)
        .input(
            "field",
            match pres.field {
                FieldSpec::Rational => 0,
                FieldSpec::Prime(p) => p,
            },
        )
        .input("vars", pres.e)
        .input("gens", pres.gens.len())
        .input("window", window);
    if let Some(dim) = a.dim {
        rep.input("dim_hint", dim);
    }
    let inv = &report.invariants;
    echo_invariants(&mut rep, report.class, inv);
    rep.text(
        "sextuple",
        format!("{},{},{},{},{},{}", inv.h, inv.l, inv.n, inv.p, inv.q, inv.r),
    );
    rep.taylor("ranks", 0, report.a_dims.iter().map(|&d| (d as i64).into()).collect());
    let bigraded: Vec<String> =
        report.bigraded.iter().map(|(i, j, r)| format!("{i}:{j}:{r}")).collect();
    rep.text("bigraded", bigraded.join(","));
    rep.flag("gorenstein", report.gorenstein);
    rep.flag("golod", report.golod);
    rep.flag("eq_ranks", report.eq_ranks_ok);
    rep.flag("rigorous_window", report.stabilization.rigorous);
    rep.flag("tail_clear", report.stabilization.tail_clear);
    rep.flag("alternating_zero", report.stabilization.alternating_ok);
    rep.flag("products_complete", report.stabilization.products_complete);
    rep.flag("depth_certified", report.depth_certified);
    rep.flag("dimension_exact", report.dimension_exact);
    rep.flag("exception", report.exception.is_some());
    if let Some(kind) = report.exception {
        rep.text("exception_kind", kind);
    }
    done(rep)
}

fn parse_field(raw: u64) -> Result<FieldSpec, CmdError> {
    let spec = if raw == 0 { FieldSpec::Rational } else { FieldSpec::Prime(raw) };
    spec.validate().map_err(|e| input(e.to_string()))?;
    Ok(spec)
}

fn run_formula(
    spec: FieldSpec,
    formula: Formula,
    degree: i64,
) -> Result<Vec<FormulaCheck>, CmdError> {
    match spec {
        FieldSpec::Rational => verify_formula(&Rat, formula, degree),
        FieldSpec::Prime(p) => {
            let f = Fp::new(p).map_err(|e| input(e.to_string()))?;
            verify_formula(&f, formula, degree)
        }
    }
    .map_err(map_resolve)
}

fn dump_fixture(spec: FieldSpec, label: &str, rep: &mut Report) -> Result<(), CmdError> {
    let rows = match spec {
        FieldSpec::Rational => dump_rows(&Rat, label),
        FieldSpec::Prime(p) => {
            let f = Fp::new(p).map_err(|e| input(e.to_string()))?;
            dump_rows(&f, label)
        }
    }?;
    rep.text("fixture", label);
    rep.taylor("dims", 0, rows.0.into_iter().map(Into::into).collect());
    rep.int("mult_rows", rows.1.len() as i64);
    for (idx, row) in rows.1.iter().enumerate() {
        rep.text(format!("mult_{idx:04}").as_str(), row);
    }
    Ok(())
}

fn dump_rows<F: codepth3::Field>(
    field: &F,
    label: &str,
) -> Result<(Vec<i64>, Vec<String>), CmdError> {
    let zoo = zoo_algebras(field).map_err(map_galg)?;
    let Some((_, alg)) = zoo.iter().find(|(name, _)| name == label) else {
        let names: Vec<&str> = zoo.iter().map(|(name, _)| name.as_str()).collect();
        return Err(input(format!("unknown fixture {label:?}; available: {}", names.join(", "))));
    };
    let dims: Vec<i64> = (0..=alg.top()).map(|i| alg.dim(i as i64) as i64).collect();
    let rows = alg
        .dump_mult()
        .iter()
        .map(|(i, a, j, b, k, c)| format!("{i}:{a}:{j}:{b}:{k}:{c}"))
        .collect();
    Ok((dims, rows))
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<CmdOutput, CmdError> {
    let spec = parse_field(a.field)?;
    let mut rep = Report::new("verify");
    if let Some(label) = &a.dump_fixture {
        rep.input("field", a.field).input("fixture", label);
        dump_fixture(spec, label, &mut rep)?;
        return done(rep);
    }
    let formulas: Vec<Formula> = if a.all {
        Formula::ALL.to_vec()
    } else {
        let name = a
            .formula
            .as_deref()
            .ok_or_else(|| input("verify needs --formula NAME, --all, or --dump-fixture"))?;
        let formula = Formula::from_str(name).map_err(|_| {
            let names: Vec<&str> = Formula::ALL.iter().map(|f| f.name()).collect();
            input(format!("unknown formula {name:?}; catalog: {}", names.join(", ")))
        })?;
        vec![formula]
    };
    if a.degree < 0 {
        return Err(input(format!("--degree {} must be nonnegative", a.degree)));
    }
    rep.input("formulas", if a.all { "all".to_string() } else { formulas[0].to_string() })
        .input("degree", a.degree)
        .input("field", a.field);
    let mut all_ok = true;
    for formula in formulas {
        let checks = run_formula(spec, formula, a.degree)?;
        let passes = checks.iter().filter(|c| c.ok).count();
        rep.int(&format!("{formula}_fixtures"), checks.len() as i64);
        rep.int(&format!("{formula}_passes"), passes as i64);
        rep.flag(&format!("{formula}_ok"), passes == checks.len());
        for (idx, check) in checks.iter().filter(|c| !c.ok).enumerate() {
            all_ok = false;
            rep.text(
                &format!("{formula}_fail_{idx}"),
                format!("{}: {} vs {}", check.label, check.lhs, check.rhs),
            );
        }
    }
    rep.flag("ok", all_ok);
    Ok(CmdOutput { report: rep, math_failure: !all_ok })
}

pub fn cmd_examples() -> Result<CmdOutput, CmdError> {
    let mut rep = Report::new("examples");
    rep.int("count", corpus::EXAMPLES.len() as i64);
    for ex in &corpus::EXAMPLES {
        rep.text(ex.name, ex.summary);
    }
    done(rep)
}

fn poly_str<T: fmt::Display>(terms: &[(i64, T)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let cs = c.to_string();
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, cs),
        };
        out.push_str(if idx == 0 {
            if neg {
                "-"
            } else {
                ""
            }
        } else if neg {
            " - "
        } else {
            " + "
        });
        match (*e, mag == "1") {
            (0, _) => out.push_str(&mag),
            (1, true) => out.push('t'),
            (1, false) => {
                out.push_str(&mag);
                out.push('t');
            }
            (_, true) => {
                out.push_str(&format!("t^{e}"));
            }
            (_, false) => {
                out.push_str(&format!("{mag}t^{e}"));
            }
        }
    }
    out
}

/// Human-readable rendering of a report: one aligned `key value` table with
/// series shown as polynomial fractions.
pub fn pretty(rep: &Report) -> String {
    let mut lines: Vec<(String, String)> = Vec::new();
    for (k, v) in &rep.inputs {
        lines.push((format!("input {k}"), v.clone()));
    }
    for item in &rep.items {
        match item {
            Item::Text { key, value } => lines.push((key.clone(), value.clone())),
            Item::Int { key, value } => lines.push((key.clone(), value.to_string())),
            Item::Rational { key, num, den } => lines.push((key.clone(), format!("{num}/{den}"))),
            Item::Flag { key, value } => lines.push((key.clone(), value.to_string())),
            Item::Series { key, num, den } => {
                lines.push((key.clone(), format!("({}) / ({})", poly_str(num), poly_str(den))));
            }
            Item::Taylor { key, lo, coeffs } => {
                let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                lines.push((format!("{key} (from t^{lo})"), cs.join(" ")));
            }
        }
    }
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = format!("codepth3 {}\n", rep.command);
    for (k, v) in lines {
        out.push_str(&format!("  {k:<width$}  {v}\n"));
    }
    out
}
