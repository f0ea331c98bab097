use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use reslat_core::enumeration::HARD_ENUMERATION_LIMIT;
use reslat_core::io::write_catalog;
use reslat_core::{
    check_laws, classify, decompose, direct_product_with_cap, enumerate_algebras, fixture, quotient, structure_report,
    verify_axioms, Algebra, AlgebraFile, ElementSet, EnumerationOptions, Error, LawSuiteReport, DEFAULT_SIZE_CAP,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Appends formatted output; stdout is written once at exit.
macro_rules! say {
    (@inline $buf:expr, $($arg:tt)*) => {
        $buf.push_str(&format!($($arg)*))
    };
    ($buf:expr, $($arg:tt)*) => {{
        $buf.push_str(&format!($($arg)*));
        $buf.push('\n');
    }};
}

const SIZE_CAP_VAR: &str = "RESLAT_SIZE_CAP";

#[derive(Parser)]
#[command(name = "reslat", version, about = "Analyze finite residuated lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the residuated-lattice axioms and list every violation.
    Verify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Filters, Spec, Max, Rad, Ds, Boolean center, lifting and classification.
    Report {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Quotient by the filter given as comma-separated labels.
    Quotient {
        path: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        filter: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct product of two or more algebras.
    Product {
        #[arg(required = true, num_args = 2..)]
        paths: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split an algebra with lifting Boolean center into local factors.
    Decompose {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Directory for the factor files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All algebras of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = EnumerationOptions::default().cap)]
        cap: usize,
        #[arg(long)]
        json: bool,
        /// Directory for the catalog files and index.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the residuated and Boolean identity suites.
    CheckLaws {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a built-in algebra.
    Fixture {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error with its exit status: 1 for analysis failures, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn analysis(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Structure(_)
            | Error::Json(_)
            | Error::Io(_)
            | Error::UnknownFixture(_)
            | Error::EnumerationCap { .. }
            | Error::IndexOutOfRange { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn read_file(path: &Path) -> Result<AlgebraFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    AlgebraFile::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_unchecked(path: &Path) -> Result<Algebra, Failure> {
    read_file(path)?.to_algebra().map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    let alg = load_unchecked(path)?;
    let report = verify_axioms(&alg);
    if let Some(first) = report.violations.first() {
        return Err(Failure::analysis(format!(
            "{}: not a residuated lattice ({} violations; first: {})",
            path.display(),
            report.violations.len(),
            first.describe(&alg)
        )));
    }
    Ok(alg)
}

/// Writes `text` to `out`, or queues it for stdout.
fn emit(buf: &mut String, text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            buf.push_str(text);
            Ok(())
        }
    }
}

/// A closed pipe on the reader's side is not an error.
fn write_stdout(text: &str) -> Result<(), Failure> {
    match std::io::stdout().write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(Failure::usage(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(buf: &mut String, value: &T) {
    say!(buf, "{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn set_labels(alg: &Algebra, s: &ElementSet) -> Vec<String> {
    s.iter().map(|i| alg.label(i).to_string()).collect()
}

fn ok_or_fail(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(buf: &mut String, path: &Path, json: bool) -> CmdResult {
    let alg = load_unchecked(path)?;
    let report = verify_axioms(&alg);
    let described: Vec<String> = report.violations.iter().map(|v| v.describe(&alg)).collect();
    if json {
        print_json(
            buf,
            &json!({
                "name": alg.name(),
                "size": alg.n(),
                "passed": report.passed(),
                "violations": described,
            }),
        );
    } else if report.passed() {
        say!(buf, "pass: {} ({} elements)", alg.name(), alg.n());
    } else {
        say!(buf, "fail: {} ({} violations)", alg.name(), described.len());
        for d in &described {
            say!(buf, "  {d}");
        }
    }
    Ok(ok_or_fail(report.passed()))
}

fn cmd_report(buf: &mut String, path: &Path, json: bool) -> CmdResult {
    let alg = load(path)?;
    let r = structure_report(&alg)?;
    if json {
        print_json(buf, &r);
        return Ok(ExitCode::SUCCESS);
    }
    let list = |sets: &[Vec<String>]| sets.iter().map(|s| braces(s)).collect::<Vec<_>>().join(", ");
    let c = &r.classification;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    say!(buf, "{} ({} elements: {})", r.name, r.size, r.elements.join(" "));
    let filters: Vec<Vec<String>> = r.filters.iter().map(|f| f.members.clone()).collect();
    say!(buf, "filters ({}): {}", filters.len(), list(&filters));
    say!(buf, "Spec ({}): {}", r.spec.len(), list(&r.spec));
    say!(buf, "Max ({}): {}", r.max.len(), list(&r.max));
    say!(buf, "Rad: {}", braces(&r.radical));
    say!(buf, "Ds: {}", braces(&r.dense));
    say!(buf, "B: {}", braces(&r.boolean_center));
    say!(buf, "A/Rad ({}): {}", r.radical_quotient.len(), r.radical_quotient.join(" "));
    say!(buf, "B(A/Rad): {}", braces(&r.radical_quotient_center));
    match &r.lifting.witness {
        Some(w) => say!(buf, "lifting: no (witness {w})"),
        None => say!(buf, "lifting: yes"),
    }
    say!(
        buf,
        "local: {}  semilocal: {}  perfect: {}  radical-dense: {}  maximal: {}",
        yes_no(c.local),
        yes_no(c.semilocal),
        yes_no(c.perfect),
        yes_no(c.radical_dense),
        yes_no(c.maximal)
    );
    for note in &c.notes {
        say!(buf, "note [{}]: {}", note.code, note.message);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_quotient(buf: &mut String, path: &Path, filter: &[String], out: Option<&Path>) -> CmdResult {
    let alg = load(path)?;
    let mut members = ElementSet::empty(alg.n());
    for label in filter {
        let i =
            alg.index_of(label.trim()).ok_or_else(|| Failure::usage(format!("--filter: unknown label {label:?}")))?;
        members.insert(i);
    }
    let q = quotient(&alg, &members)?;
    let classes: Vec<Value> = q
        .classes
        .iter()
        .enumerate()
        .map(|(k, c)| json!({ "class": q.quotient.label(k), "members": set_labels(&alg, c) }))
        .collect();
    let mut metadata = serde_json::Map::new();
    metadata.insert("source".into(), json!(alg.name()));
    metadata.insert("filter".into(), json!(set_labels(&alg, &members)));
    metadata.insert("classes".into(), Value::Array(classes));
    let text = AlgebraFile::from_algebra(&q.quotient).with_metadata(metadata).to_json_string();
    emit(buf, &text, out)?;
    if let Some(p) = out {
        say!(buf, "{} -> {} ({} classes)", alg.name(), p.display(), q.quotient.n());
        for (k, c) in q.classes.iter().enumerate() {
            say!(buf, "  {} = {}", q.quotient.label(k), braces(&set_labels(&alg, c)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn size_cap() -> Result<usize, Failure> {
    match std::env::var(SIZE_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::usage(format!("{SIZE_CAP_VAR}={v:?} is not a size"))),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn cmd_product(buf: &mut String, paths: &[PathBuf], out: Option<&Path>) -> CmdResult {
    let factors = paths.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
    let p = direct_product_with_cap(&factors, size_cap()?)?;
    emit(buf, &AlgebraFile::from_algebra(&p.algebra).to_json_string(), out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(buf: &mut String, path: &Path, json: bool, out: Option<&Path>) -> CmdResult {
    let alg = load(path)?;
    let d = decompose(&alg)?;
    let factors: Vec<Algebra> = d
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| f.algebra.clone().with_name(format!("{}-factor{}", alg.name(), i + 1)))
        .collect();
    let mut files = Vec::new();
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::usage(format!("{}: {e}", dir.display())))?;
        for f in &factors {
            let file = dir.join(format!("{}.json", f.name()));
            emit(buf, &AlgebraFile::from_algebra(f).to_json_string(), Some(&file))?;
            files.push(file.display().to_string());
        }
    }
    let iso: Vec<(String, Vec<String>)> = alg
        .elements()
        .map(|a| {
            let coords = d.product.decode(d.iso.apply(a));
            let labels = coords.iter().zip(&factors).map(|(&c, f)| f.label(c).to_string()).collect();
            (alg.label(a).to_string(), labels)
        })
        .collect();
    if json {
        let factor_json: Vec<Value> = factors
            .iter()
            .zip(&d.idempotents)
            .zip(&d.factor_flags)
            .enumerate()
            .map(|(i, ((f, &e), flags))| {
                json!({
                    "name": f.name(),
                    "idempotent": alg.label(e),
                    "elements": f.labels(),
                    "size": flags.size,
                    "local": flags.local,
                    "file": files.get(i),
                })
            })
            .collect();
        let iso_json: Vec<Value> = iso.iter().map(|(a, t)| json!({ "element": a, "image": t })).collect();
        print_json(
            buf,
            &json!({
                "name": alg.name(),
                "idempotents": d.idempotents.iter().map(|&e| alg.label(e)).collect::<Vec<_>>(),
                "factors": factor_json,
                "iso": iso_json,
                "classification": d.classification,
            }),
        );
        return Ok(ExitCode::SUCCESS);
    }
    say!(buf, "{}: {} local factors", alg.name(), factors.len());
    for (i, (f, &e)) in factors.iter().zip(&d.idempotents).enumerate() {
        let file = files.get(i).map(|p| format!(" -> {p}")).unwrap_or_default();
        say!(buf, "  e{} = {}: {} ({} elements: {}){file}", i + 1, alg.label(e), f.name(), f.n(), f.labels().join(" "));
    }
    say!(buf, "isomorphism a -> (a v e_i):");
    for (a, t) in &iso {
        say!(buf, "  {a} -> ({})", t.join(","));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(buf: &mut String, order: usize, cap: usize, json: bool, out: Option<&Path>) -> CmdResult {
    if cap > HARD_ENUMERATION_LIMIT {
        return Err(Failure::usage(format!("--cap {cap} exceeds the hard limit {HARD_ENUMERATION_LIMIT}")));
    }
    if order > cap {
        return Err(Failure::usage(format!(
            "--order {order} exceeds --cap {cap} (raise --cap, at most {HARD_ENUMERATION_LIMIT})"
        )));
    }
    let catalog = enumerate_algebras(order, &EnumerationOptions { cap })?;
    if let Some(dir) = out {
        write_catalog(&catalog, dir)?;
    }
    let mut rows = Vec::new();
    for alg in &catalog.entries {
        let c = classify(alg)?;
        rows.push((alg, c));
    }
    if json {
        let entries: Vec<Value> = rows
            .iter()
            .map(|(alg, c)| {
                json!({
                    "name": alg.name(),
                    "local": c.local,
                    "perfect": c.perfect,
                    "radical_dense": c.radical_dense,
                    "has_lifting": c.has_lifting,
                    "max_count": c.max_count,
                    "spec_count": c.spec_count,
                    "filter_count": c.filter_count,
                })
            })
            .collect();
        print_json(buf, &json!({ "order": order, "counts": catalog.counts, "entries": entries }));
        return Ok(ExitCode::SUCCESS);
    }
    say!(buf, "order {order}: {} algebras", catalog.entries.len());
    for (k, v) in &catalog.counts {
        say!(buf, "  {k}: {v}");
    }
    for (alg, c) in &rows {
        say!(
            buf,
            "  {}  max={} spec={} filters={}{}{}",
            alg.name(),
            c.max_count,
            c.spec_count,
            c.filter_count,
            if c.local { " local" } else { "" },
            if c.has_lifting { " lifting" } else { "" }
        );
    }
    if let Some(dir) = out {
        say!(buf, "wrote {}", dir.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check_laws(buf: &mut String, path: &Path, json: bool) -> CmdResult {
    let alg = load(path)?;
    let suites: Vec<LawSuiteReport> = check_laws(&alg);
    let passed = suites.iter().all(LawSuiteReport::passed);
    let witness =
        |w: &Option<Vec<usize>>| w.as_ref().map(|w| w.iter().map(|&i| alg.label(i).to_string()).collect::<Vec<_>>());
    if json {
        let body: Vec<Value> = suites
            .iter()
            .map(|s| {
                let laws: Vec<Value> = s
                    .results
                    .iter()
                    .map(|r| {
                        json!({
                            "id": r.id,
                            "statement": r.statement,
                            "instances": r.instances,
                            "failures": r.failures,
                            "first_failure": witness(&r.first_failure),
                        })
                    })
                    .collect();
                json!({ "suite": s.suite, "passed": s.passed(), "laws": laws })
            })
            .collect();
        print_json(buf, &json!({ "name": alg.name(), "passed": passed, "suites": body }));
    } else {
        for s in &suites {
            let ok = s.results.iter().filter(|r| r.passed()).count();
            say!(buf, "{}: {ok}/{} laws pass", s.suite, s.results.len());
            for r in &s.results {
                let status = if r.passed() { "pass" } else { "FAIL" };
                say!(@inline buf, "  {status} {:<32} {}/{}", r.id, r.instances - r.failures, r.instances);
                match witness(&r.first_failure) {
                    Some(w) => say!(buf, "  first failure ({})", w.join(", ")),
                    None => say!(buf, ""),
                }
            }
        }
    }
    Ok(ok_or_fail(passed))
}

fn cmd_fixture(buf: &mut String, name: &str, out: Option<&Path>) -> CmdResult {
    let alg = fixture(name)?;
    emit(buf, &AlgebraFile::from_algebra(&alg).to_json_string(), out)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli, buf: &mut String) -> CmdResult {
    match cli.command {
        Command::Verify { path, json } => cmd_verify(buf, &path, json),
        Command::Report { path, json } => cmd_report(buf, &path, json),
        Command::Quotient { path, filter, out } => cmd_quotient(buf, &path, &filter, out.as_deref()),
        Command::Product { paths, out } => cmd_product(buf, &paths, out.as_deref()),
        Command::Decompose { path, json, out } => cmd_decompose(buf, &path, json, out.as_deref()),
        Command::Enumerate { order, cap, json, out } => cmd_enumerate(buf, order, cap, json, out.as_deref()),
        Command::CheckLaws { path, json } => cmd_check_laws(buf, &path, json),
        Command::Fixture { name, out } => cmd_fixture(buf, &name, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let mut buf = String::new();
    let result = run(Cli::parse(), &mut buf);
    if let Err(f) = write_stdout(&buf) {
        eprintln!("error: {}", f.message);
        return ExitCode::from(f.code);
    }
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
