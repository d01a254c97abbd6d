//! Command-line front end. [`run`] never exits the process; it returns the
//! status: 0 pass, 1 axiom or precondition failure, 2 input or usage error.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use esnkit_core::biordered::{check_lbec, check_locally_inductive, check_pseudo_product_laws, Inductive};
use esnkit_core::category::{check_category, check_ordered, OrderMode};
use esnkit_core::correspondence::{
    build_category, build_semigroupoid, classify, find_category_structure, roundtrip_verify, RoundTrip,
};
use esnkit_core::enumerate::{enumerate, Class, Instance};
use esnkit_core::inverse::check_inverse;
use esnkit_core::morphism::{
    check_cat_functor, check_sgpd_map, verify_correspondence, CarrierMap, CatKind, CheckedCategory, EhresmannSgpd,
    SgpdKind,
};
use esnkit_core::relations::{antichain, chain, gen_relation_semigroup, three_element_category, z2};
use esnkit_core::semilattice::{check_local_meet_semilattice, is_local_meet_semilattice};
use esnkit_core::table::check_associativity;
use esnkit_core::unary::{check_order_coincidence_on_projections, check_unary_axioms};
use esnkit_core::{AxiomKind, Report, SectionData};
use serde_json::{json, Value};

use crate::format::{parse_map, parse_structure, serialize_structure, Body, StructureFile};
use crate::render::{report_json, report_text, Labels, Plain};

#[derive(Debug, Parser)]
#[command(name = "esnkit", version, about = "Check and convert finite Ehresmann semigroupoids and their categories")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a structure file against an axiom system.
    Verify {
        /// Structure file; `-` or absent reads standard input.
        file: Option<PathBuf>,
        /// Axiom system; defaults by file kind.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Report class membership flags.
    Classify { file: Option<PathBuf> },
    /// Build the category of a two-sided Ehresmann semigroupoid.
    ToCat {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the semigroupoid of a local biordered Ehresmann category.
    ToSgpd {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that the two constructions undo each other on the input.
    Roundtrip { file: Option<PathBuf> },
    /// Check a map between two structures.
    CheckMap {
        #[arg(long)]
        map: PathBuf,
        /// 211, vee, vee-inequality, wedge, ifunctor, ofunctor, iprefunctor or correspondence.
        #[arg(long)]
        kind: String,
    },
    /// Generate every structure of a class on a carrier of the given size.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        size: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Directory to write one file per structure into.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a standard example.
    Example {
        #[command(flatten)]
        which: ExampleArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ExampleArgs {
    /// Binary relations on an N-element set.
    #[arg(long, value_name = "N")]
    bx: Option<usize>,
    /// The N-element chain.
    #[arg(long, value_name = "N")]
    chain: Option<usize>,
    /// N unrelated idempotents.
    #[arg(long, value_name = "N")]
    antichain: Option<usize>,
    /// The two-element group.
    #[arg(long)]
    z2: bool,
    /// One arrow between two objects.
    #[arg(long)]
    arrow: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Core(#[from] esnkit_core::Error),
}

impl From<crate::format::ParseError> for CliError {
    fn from(e: crate::format::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_input_error() => 1,
            _ => 2,
        }
    }

    fn class(&self) -> &'static str {
        match self {
            CliError::Core(esnkit_core::Error::Precondition { .. }) => "precondition",
            CliError::Core(esnkit_core::Error::Inconsistent(_)) => "inconsistent",
            _ => "input",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// What a command produced: a status plus both renderings.
struct Outcome {
    status: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn report(command: &str, title: &str, r: &Report, labels: &dyn Labels) -> Self {
        let mut json = report_json(r);
        json["command"] = json!(command);
        Outcome {
            status: if r.passed() { 0 } else { 1 },
            text: report_text(title, r, labels),
            json,
        }
    }

    fn info(command: &str, text: String, mut json: Value) -> Self {
        json["command"] = json!(command);
        json["verdict"] = json!("pass");
        Outcome { status: 0, text, json }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = e.exit_code();
            let target: &mut dyn Write = if status == 0 { stdout } else { stderr };
            let _ = write!(target, "{}", e.render());
            return status;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(out) => {
            if cli.machine {
                let _ = writeln!(stdout, "{}", out.json);
            } else {
                let _ = write!(stdout, "{}", out.text);
            }
            out.status
        }
        Err(e) => {
            let report = match &e {
                CliError::Core(esnkit_core::Error::Precondition { report, .. }) => Some(report),
                _ => None,
            };
            if cli.machine {
                let mut j = json!({ "error": { "kind": e.class(), "message": e.to_string() } });
                if let Some(r) = report {
                    j["error"]["report"] = report_json(r);
                }
                let _ = writeln!(stdout, "{j}");
            } else {
                let _ = writeln!(stderr, "error: {e}");
                if let Some(r) = report {
                    let _ = write!(stderr, "{}", report_text("precondition", r, &Plain));
                }
            }
            e.status()
        }
    }
}

fn read_text(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String> {
    match path {
        None => read_stdin(stdin),
        Some(p) if p == Path::new("-") => read_stdin(stdin),
        Some(p) => fs::read_to_string(p).map_err(|e| input(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin(stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    stdin
        .read_to_string(&mut s)
        .map_err(|e| input(format!("standard input: {e}")))?;
    Ok(s)
}

fn load(path: Option<&Path>, stdin: &mut dyn Read) -> Result<StructureFile> {
    let text = read_text(path, stdin)?;
    parse_structure(&text).map_err(|e| match path {
        Some(p) if p != Path::new("-") => input(format!("{}: {e}", p.display())),
        _ => e.into(),
    })
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Result<Outcome> {
    match cmd {
        Command::Verify { file, kind } => {
            let f = load(file.as_deref(), stdin)?;
            let kind = kind.unwrap_or_else(|| default_kind(&f.body).to_string());
            let r = verify(&f.body, &kind)?;
            let mut out = Outcome::report("verify", &format!("verify {kind}"), &r, &f);
            out.json["kind"] = json!(kind);
            Ok(out)
        }
        Command::Classify { file } => {
            let f = load(file.as_deref(), stdin)?;
            let r = classify_report(&f.body)?;
            Ok(Outcome::report("classify", "classify", &r, &f))
        }
        Command::ToCat { file, output } => {
            let f = load(file.as_deref(), stdin)?;
            let Body::Unary(s) = &f.body else {
                return Err(input(format!("to-cat needs a `unary` file, got `{}`", f.body.kind().name())));
            };
            let c = build_category(s)?;
            let out = StructureFile::new(Body::Biordered(c)).with_labels(f.labels.clone());
            emit("to-cat", &out, output.as_deref())
        }
        Command::ToSgpd { file, output } => {
            let f = load(file.as_deref(), stdin)?;
            let c = f.body.biordered().ok_or_else(|| {
                input(format!("to-sgpd needs an ordered or biordered category, got `{}`", f.body.kind().name()))
            })?;
            let s = build_semigroupoid(&c)?;
            let out = StructureFile::new(Body::Unary(s)).with_labels(f.labels.clone());
            emit("to-sgpd", &out, output.as_deref())
        }
        Command::Roundtrip { file } => {
            let f = load(file.as_deref(), stdin)?;
            let r = match &f.body {
                Body::Unary(s) => roundtrip_verify(RoundTrip::Semigroupoid(s))?,
                other => match other.biordered() {
                    Some(c) => roundtrip_verify(RoundTrip::Category(&c))?,
                    None => return Err(input("roundtrip needs a `unary` file or an ordered or biordered category")),
                },
            };
            Ok(Outcome::report("roundtrip", "roundtrip", &r, &f))
        }
        Command::CheckMap { map, kind } => check_map(&map, &kind),
        Command::Enumerate {
            class,
            size,
            dedup,
            output,
        } => run_enumerate(&class, size, dedup, output.as_deref()),
        Command::Example { which, output } => {
            let s = if let Some(n) = which.bx {
                gen_relation_semigroup(n)?
            } else if let Some(n) = which.chain {
                chain(n)?
            } else if let Some(n) = which.antichain {
                antichain(n)?
            } else if which.z2 {
                z2()
            } else {
                three_element_category()
            };
            emit("example", &StructureFile::from_unary(s), output.as_deref())
        }
    }
}

fn emit(command: &str, f: &StructureFile, output: Option<&Path>) -> Result<Outcome> {
    let text = serialize_structure(f);
    match output {
        Some(p) => {
            fs::write(p, &text).map_err(|e| input(format!("{}: {e}", p.display())))?;
            Ok(Outcome::info(
                command,
                format!("wrote {}\n", p.display()),
                json!({ "written": p.display().to_string() }),
            ))
        }
        None => Ok(Outcome::info(command, text.clone(), json!({ "structure": text }))),
    }
}

fn default_kind(b: &Body) -> &'static str {
    match b {
        Body::Sgpd(_) => "semigroupoid",
        Body::Unary(s) if s.has_star() => "two-sided-ehresmann",
        Body::Unary(_) => "left-ehresmann",
        Body::Category(_) => "category",
        Body::Ordered(..) => "lic",
        Body::Biordered(_) => "lbec",
    }
}

/// Every kind `verify` accepts.
pub const VERIFY_KINDS: [&str; 18] = [
    "semigroupoid",
    "local-meet-semilattice",
    "inverse",
    "left-ehresmann",
    "right-ehresmann",
    "two-sided-ehresmann",
    "left-restriction",
    "right-restriction",
    "two-sided-restriction",
    "order-coincidence",
    "category",
    "ordered",
    "ordered-restrictions",
    "ordered-corestrictions",
    "ordered-both",
    "lic",
    "lig",
    "lbec",
];

fn verify(b: &Body, kind: &str) -> Result<Report> {
    let wrong = |need: &str| input(format!("kind `{kind}` needs {need}, got a `{}` file", b.kind().name()));
    let unary = || match b {
        Body::Unary(s) => Ok(s),
        _ => Err(wrong("a `unary` file")),
    };
    if let Some(k) = AxiomKind::from_name(kind) {
        return Ok(check_unary_axioms(unary()?, k)?);
    }
    Ok(match kind {
        "semigroupoid" => check_associativity(b.table()),
        "local-meet-semilattice" => check_local_meet_semilattice(b.table())?.0,
        "inverse" => {
            let c = check_inverse(b.table())?;
            let mut r = c.report;
            if let (Body::Unary(s), Some(induced)) = (b, &c.structure) {
                for i in 0..s.size() {
                    if s.plus(i) != induced.plus(i) {
                        r.violate("inverse-plus", &[i, induced.plus(i)]);
                    }
                    if s.has_star() && s.star(i) != induced.star(i) {
                        r.violate("inverse-star", &[i, induced.star(i)]);
                    }
                }
            }
            r
        }
        "order-coincidence" => check_order_coincidence_on_projections(unary()?)?,
        "category" => check_category(b.category().ok_or_else(|| wrong("a category file"))?),
        "ordered" | "ordered-restrictions" | "ordered-corestrictions" | "ordered-both" => {
            let Body::Ordered(c, o) = b else {
                return Err(wrong("an `ordered-category` file"));
            };
            let mode = match kind {
                "ordered" => OrderMode::Plain,
                "ordered-restrictions" => OrderMode::Restrictions,
                "ordered-corestrictions" => OrderMode::Corestrictions,
                _ => OrderMode::Both,
            };
            check_ordered(c, o, mode)?.report
        }
        "lic" | "lig" => {
            let want = if kind == "lic" { Inductive::Category } else { Inductive::Groupoid };
            let c = b.biordered().ok_or_else(|| wrong("an ordered category"))?;
            if c.leq_l() != c.leq_r() {
                return Err(wrong("a single order (leq_l and leq_r differ)"));
            }
            check_locally_inductive(c.cat(), c.leq_l(), want)?
        }
        "lbec" => {
            let c = b.biordered().ok_or_else(|| wrong("an ordered or biordered category"))?;
            let chk = check_lbec(&c)?;
            match &chk.lbec {
                Some(l) => {
                    let mut r = chk.report.clone();
                    r.absorb(check_pseudo_product_laws(l));
                    r
                }
                None => chk.report,
            }
        }
        _ => {
            return Err(input(format!(
                "unknown kind `{kind}`; expected one of: {}",
                VERIFY_KINDS.join(", ")
            )))
        }
    })
}

fn flags(entries: &[(&str, bool)]) -> Report {
    let mut r = Report::new();
    for &(name, v) in entries {
        r.section(name, SectionData::Flag(v));
    }
    r
}

fn classify_report(b: &Body) -> Result<Report> {
    match b {
        Body::Unary(s) => Ok(classify(s)?.to_report()),
        Body::Sgpd(t) => {
            let assoc = check_associativity(t);
            if !assoc.passed() {
                return Err(esnkit_core::Error::Precondition {
                    required: "semigroupoid",
                    report: assoc,
                }
                .into());
            }
            Ok(flags(&[
                ("semigroupoid", true),
                ("semigroup", t.is_total()),
                ("local-meet-semilattice", is_local_meet_semilattice(t)),
                ("inverse", check_inverse(t)?.structure.is_some()),
                ("admits-category-structure", find_category_structure(t)?.is_some()),
            ]))
        }
        _ => {
            let c = b.category().expect("category kinds");
            let category = check_category(c).passed();
            let mut entries = vec![("category", category)];
            if category {
                entries.push(("groupoid", c.groupoid_inverses().is_ok()));
                if let Some(bc) = b.biordered() {
                    let orders_ok = bc.leq_l().is_partial_order() && bc.leq_r().is_partial_order();
                    entries.push(("lbec", orders_ok && check_lbec(&bc)?.report.passed()));
                    let single = orders_ok && bc.leq_l() == bc.leq_r();
                    for (name, want) in [("lic", Inductive::Category), ("lig", Inductive::Groupoid)] {
                        let v = single && check_locally_inductive(bc.cat(), bc.leq_l(), want)?.passed();
                        entries.push((name, v));
                    }
                }
            }
            Ok(flags(&entries))
        }
    }
}

enum MapKind {
    Sgpd(SgpdKind),
    Cat(CatKind),
    Correspondence,
}

fn map_kind(name: &str) -> Result<MapKind> {
    Ok(match name {
        "211" | "two-one-one" => MapKind::Sgpd(SgpdKind::TwoOneOne),
        "vee" => MapKind::Sgpd(SgpdKind::Vee),
        "vee-inequality" => MapKind::Sgpd(SgpdKind::VeeInequality),
        "wedge" => MapKind::Sgpd(SgpdKind::Wedge),
        "ifunctor" | "inductive" => MapKind::Cat(CatKind::Inductive),
        "ofunctor" | "ordered" => MapKind::Cat(CatKind::Ordered),
        "iprefunctor" | "prefunctor" => MapKind::Cat(CatKind::Prefunctor),
        "correspondence" => MapKind::Correspondence,
        _ => {
            return Err(input(format!(
                "unknown map kind `{name}`; expected 211, vee, vee-inequality, wedge, ifunctor, ofunctor, iprefunctor or correspondence"
            )))
        }
    })
}

fn ehresmann(f: &StructureFile) -> Result<EhresmannSgpd> {
    match &f.body {
        Body::Unary(s) => Ok(EhresmannSgpd::new(s.clone())?),
        other => Err(input(format!("map end must be a `unary` file, got `{}`", other.kind().name()))),
    }
}

fn checked_category(f: &StructureFile) -> Result<CheckedCategory> {
    match &f.body {
        Body::Unary(_) => Ok(ehresmann(f)?.category().clone()),
        other => match other.biordered() {
            Some(c) => Ok(CheckedCategory::new(c)?),
            None => Err(input(format!(
                "map end must be a `unary` file or an ordered or biordered category, got `{}`",
                other.kind().name()
            ))),
        },
    }
}

fn check_map(path: &Path, kind: &str) -> Result<Outcome> {
    let kind_v = map_kind(kind)?;
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let m = parse_map(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new(""));
    let open = |p: &Path| -> Result<StructureFile> {
        let full = base.join(p);
        let t = fs::read_to_string(&full).map_err(|e| input(format!("{}: {e}", full.display())))?;
        parse_structure(&t).map_err(|e| input(format!("{}: {e}", full.display())))
    };
    let (src, dst) = (open(&m.src)?, open(&m.dst)?);
    let send = m
        .resolve(src.body.size(), dst.body.size())
        .map_err(|e| input(format!("{}: {e}", path.display())))?;
    let title = format!("check-map {kind}");
    let r = match kind_v {
        MapKind::Sgpd(k) => {
            let (a, b) = (ehresmann(&src)?, ehresmann(&dst)?);
            check_sgpd_map(&CarrierMap::new(&a, &b, send)?, k)?
        }
        MapKind::Cat(k) => {
            let (a, b) = (checked_category(&src)?, checked_category(&dst)?);
            check_cat_functor(&CarrierMap::new(&a, &b, send)?, k)?
        }
        MapKind::Correspondence => {
            let (a, b) = (ehresmann(&src)?, ehresmann(&dst)?);
            verify_correspondence(&CarrierMap::new(&a, &b, send)?)?.report
        }
    };
    let mut out = Outcome::report("check-map", &title, &r, &src);
    out.json["kind"] = json!(kind);
    Ok(out)
}

fn to_file(class: Class, x: Instance) -> StructureFile {
    match x {
        Instance::Table(t) => StructureFile::new(Body::Sgpd(t)),
        Instance::Unary(s) => StructureFile::from_unary(s),
        Instance::Category(c) if matches!(class, Class::Lic | Class::Lig) => {
            StructureFile::new(Body::Ordered(c.cat().clone(), c.leq_l().clone()))
        }
        Instance::Category(c) => StructureFile::new(Body::Biordered(c)),
    }
}

fn run_enumerate(class: &str, n: usize, dedup: bool, output: Option<&Path>) -> Result<Outcome> {
    let c = Class::from_name(class).ok_or_else(|| {
        let names: Vec<&str> = Class::ALL.iter().map(|c| c.name()).collect();
        input(format!("unknown class `{class}`; expected one of: {}", names.join(", ")))
    })?;
    let all = enumerate(c, n, dedup)?;
    let count = all.len();
    let mut files = Vec::new();
    if let Some(dir) = output {
        fs::create_dir_all(dir).map_err(|e| input(format!("{}: {e}", dir.display())))?;
        let width = count.saturating_sub(1).to_string().len();
        for (k, x) in all.into_iter().enumerate() {
            let p = dir.join(format!("{class}-{n}-{k:0width$}.txt"));
            fs::write(&p, serialize_structure(&to_file(c, x))).map_err(|e| input(format!("{}: {e}", p.display())))?;
            files.push(p.display().to_string());
        }
    }
    let what = if dedup { "isomorphism classes" } else { "labeled structures" };
    let mut text = format!("enumerate {class} size {n}: {count} {what}\n");
    if let Some(dir) = output {
        text.push_str(&format!("wrote {count} files to {}\n", dir.display()));
    }
    Ok(Outcome::info(
        "enumerate",
        text,
        json!({ "class": class, "size": n, "dedup": dedup, "count": count, "files": files }),
    ))
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let mut stdin = std::io::stdin().lock();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let status = run(std::env::args_os(), &mut stdin, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    status
}
