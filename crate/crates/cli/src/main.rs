use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lsa_core::algebra::Algebra;
use lsa_core::catalog::verify::{verify_all, verify_entry, verify_property_tables, verify_remark_isos};
use lsa_core::catalog::{format_bindings, Bindings, Catalog, Constraint, Family};
use lsa_core::cocycle::{phi, Cocycle, Representation};
use lsa_core::constructions::{check_cybe, check_o_operator};
use lsa_core::exact::{canonical_var, parse_scalar, Gq, RatFunc};
use lsa_core::format::{algebra_at, lie_at, matrix_at, parse_document, Document, Domain, Payload};
use lsa_core::iso::{search_lsa_iso, verify_lsa_iso, IsoVerdict};
use lsa_core::lie::{classify3, LieAlgebra};
use lsa_core::props::{fingerprint, is_semisimple, is_simple};

const CATALOG_ENV: &str = "LSA_CATALOG_DIR";

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: lsa_core::Error },
    #[error(transparent)]
    Core(#[from] lsa_core::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser)]
#[command(name = "lsa", version, about = "Exact checks for left-symmetric algebras and bijective 1-cocycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Params {
    /// Parameter value, e.g. --param lambda=2 or --param l=1/2+i
    #[arg(long = "param", value_name = "NAME=VALUE")]
    param: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the object described by a document and report its properties
    Check {
        file: PathBuf,
        #[command(flatten)]
        params: Params,
    },
    /// Print the left-symmetric algebra of a cocycle document
    CocycleBuild {
        file: PathBuf,
        #[command(flatten)]
        params: Params,
    },
    /// Re-verify catalog entries
    CatalogVerify {
        /// Family to verify (H, N, D1, Dl, E); repeatable
        #[arg(long)]
        family: Vec<String>,
        /// Verify a single entry
        #[arg(long, conflicts_with = "family")]
        entry: Option<String>,
        /// Also check the property tables and remark coincidences
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Verify a stored isomorphism or search for one
    Iso {
        /// iso_witness document to verify
        #[arg(long, value_name = "FILE", conflicts_with = "search")]
        verify: Option<PathBuf>,
        /// Two algebra documents to compare
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        search: Vec<PathBuf>,
        /// Treat an inconclusive search as a failure
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Print the isomorphism invariants of an algebra document
    Fingerprint {
        file: PathBuf,
        #[command(flatten)]
        params: Params,
    },
    /// Print a catalog entry as an algebra document
    CatalogShow {
        id: String,
        #[command(flatten)]
        params: Params,
    },
}

/// Text printed to stdout and whether every check passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn new() -> Self {
        Report { text: String::new(), ok: true }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl AsRef<str>) {
        self.ok &= passed;
        let mark = if passed { "ok" } else { "FAIL" };
        match detail.as_ref() {
            "" => self.line(format!("{name}: {mark}")),
            d => self.line(format!("{name}: {mark} ({d})")),
        }
    }
}

fn parse_params(p: &Params) -> Result<Bindings, CliError> {
    let mut out = Bindings::new();
    for s in &p.param {
        let (name, value) =
            s.split_once('=').ok_or_else(|| CliError::Usage(format!("expected NAME=VALUE, got `{s}`")))?;
        let v = parse_scalar(value)?
            .as_constant()
            .ok_or_else(|| CliError::Usage(format!("`{value}` is not a constant")))?;
        out.insert(canonical_var(name.trim()), v);
    }
    Ok(out)
}

fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse_document(&text).map_err(|source| CliError::Input { path: path.into(), source })
}

fn load_catalog() -> Result<Catalog, CliError> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => Catalog::load_dir(Path::new(&dir)).map_err(|source| CliError::Input { path: dir.into(), source }),
        None => Ok(Catalog::embedded()),
    }
}

fn algebra_report(r: &mut Report, a: &Algebra<Gq>) {
    match a.check_left_symmetric() {
        Ok(()) => r.check("left-symmetric", true, ""),
        Err(v) => {
            r.check("left-symmetric", false, v.to_string());
            return;
        }
    }
    if a.dim() == 3 {
        match classify3(&a.commutator_lie()) {
            Ok(c) => r.line(format!("lie class: {c}")),
            Err(e) => r.line(format!("lie class: unavailable ({e})")),
        }
    }
    let fp = fingerprint(a);
    let mut flags = vec!["left_symmetric"];
    for (set, name) in [
        (fp.associative, "associative"),
        (fp.transitive, "transitive"),
        (fp.novikov, "novikov"),
        (fp.bisymmetric, "bisymmetric"),
        (fp.commutative, "commutative"),
    ] {
        if set {
            flags.push(name);
        }
    }
    if a.dim() == 3 {
        if is_simple(a).unwrap_or(false) {
            flags.push("simple");
        }
        if matches!(is_semisimple(a), Ok(Some(_))) {
            flags.push("semisimple");
        }
    }
    r.line(format!("flags: {}", flags.join(", ")));
}

fn cocycle_of(lie: &LieAlgebra<RatFunc>, f: &[lsa_core::matrix::Matrix<RatFunc>], b: &Bindings) -> Result<Representation<Gq>, CliError> {
    let g = lie_at(lie, b)?;
    let f = f.iter().map(|m| matrix_at(m, b)).collect::<Result<Vec<_>, _>>()?;
    Ok(Representation::new(g, f)?)
}

fn cmd_check(file: &Path, params: &Params) -> Result<Report, CliError> {
    let doc = read_document(file)?;
    let b = doc.bindings(&parse_params(params)?)?;
    let mut r = Report::new();
    r.line(format!("kind: {}", doc.kind().name()));
    match &doc.payload {
        Payload::Algebra(a) => algebra_report(&mut r, &algebra_at(a, &b)?),
        Payload::Lie(g) => {
            let g = lie_at(g, &b)?;
            match g.check_jacobi() {
                Ok(()) => r.check("jacobi", true, ""),
                Err(v) => r.check("jacobi", false, v.to_string()),
            }
            if r.ok && g.dim() == 3 {
                r.line(format!("lie class: {}", classify3(&g)?));
            }
        }
        Payload::Representation { lie, f } => {
            let rep = cocycle_of(lie, f, &b)?;
            let res = rep.check();
            r.check("representation", res.is_ok(), res.err().map(|v| v.to_string()).unwrap_or_default());
        }
        Payload::Cocycle { lie, f, q } => {
            let rep = cocycle_of(lie, f, &b)?;
            let rep_ok = rep.check();
            r.check("representation", rep_ok.is_ok(), rep_ok.err().map(|v| v.to_string()).unwrap_or_default());
            let c = Cocycle::new(rep, matrix_at(q, &b)?)?;
            let co = c.check();
            r.check("cocycle", co.is_ok(), co.err().map(|v| v.to_string()).unwrap_or_default());
            r.check("bijective", c.is_bijective(), "");
            if r.ok {
                r.line("product:");
                r.text.push_str(&phi(&c)?.to_string());
            }
        }
        Payload::RMatrix { lie, r: m } => {
            let res = check_cybe(&lie_at(lie, &b)?, &matrix_at(m, &b)?);
            r.check("cybe", res.is_ok(), res.err().map(|v| v.to_string()).unwrap_or_default());
        }
        Payload::OOperator { lie, rho, t } => {
            let rep = cocycle_of(lie, rho, &b)?;
            let res = rep.check();
            r.check("representation", res.is_ok(), res.err().map(|v| v.to_string()).unwrap_or_default());
            let res = check_o_operator(&rep, &matrix_at(t, &b)?);
            r.check("o-operator", res.is_ok(), res.err().map(|v| v.to_string()).unwrap_or_default());
        }
        Payload::IsoWitness { source, target, t } => {
            let ok = verify_lsa_iso(&algebra_at(source, &b)?, &algebra_at(target, &b)?, &matrix_at(t, &b)?)?;
            r.check("isomorphism", ok, "");
        }
    }
    Ok(r)
}

fn cmd_cocycle_build(file: &Path, params: &Params) -> Result<Report, CliError> {
    let doc = read_document(file)?;
    let Payload::Cocycle { lie, f, q } = &doc.payload else {
        return Err(CliError::Usage(format!("{}: expected a cocycle document", file.display())));
    };
    let b = doc.bindings(&parse_params(params)?)?;
    let sub = |x: &RatFunc| x.substitute(&b);
    let lie = lie.try_map(sub)?;
    let f = f.iter().map(|m| m.try_map(sub)).collect::<Result<Vec<_>, _>>()?;
    let c = Cocycle::new(Representation::new(lie, f)?, q.try_map(sub)?)?;
    let a = phi(&c)?;
    let params: Vec<Constraint> = doc.params.iter().filter(|c| !b.contains_key(c.name())).cloned().collect();
    let domain = if !params.is_empty() { Domain::RatFunc } else { doc.domain };
    let out = Document { dim: doc.dim, domain, params, payload: Payload::Algebra(a) };
    Ok(Report { text: out.emit(), ok: true })
}

fn cmd_catalog_verify(families: &[String], entry: Option<&str>, all: bool, params: &Params) -> Result<Report, CliError> {
    let cat = load_catalog()?;
    let overrides = parse_params(params)?;
    let mut r = Report::new();
    if let Some(id) = entry {
        let e = cat.lookup(id)?;
        let samples = if overrides.is_empty() {
            cat.samples(e)
        } else {
            vec![e.complete(&overrides)?]
        };
        for b in samples {
            let rep = verify_entry(&cat, id, &b)?;
            r.ok &= rep.ok();
            r.line(rep.to_string());
        }
        return Ok(r);
    }
    let fams: Vec<Family> = if families.is_empty() {
        Family::ALL.to_vec()
    } else {
        families
            .iter()
            .map(|f| Family::from_name(f).ok_or_else(|| CliError::Usage(format!("unknown family `{f}`"))))
            .collect::<Result<_, _>>()?
    };
    let summary = verify_all(&cat, &fams, &overrides)?;
    for rep in summary.failures() {
        r.line(rep.to_string());
    }
    r.ok &= summary.ok();
    for f in &fams {
        let (good, total) = summary.class_counts(&cat, *f);
        r.line(format!("{}: {good}/{total} classes verified", f.name()));
    }
    if all {
        let props = verify_property_tables(&cat)?;
        r.ok &= props.ok();
        if props.ok() {
            r.line("property tables: all sets match");
        } else {
            r.line("property tables:");
            for d in &props.discrepancies {
                r.line(format!("  {d}"));
            }
        }
        let remarks = verify_remark_isos(&cat)?;
        let (mut confirmed, mut total) = (0, 0);
        for rem in &remarks {
            for (a, b, v) in &rem.pairs {
                total += 1;
                if v.is_isomorphic() {
                    confirmed += 1;
                } else {
                    r.ok = false;
                    r.line(format!("remark {a} ~ {b}: {v}"));
                }
            }
        }
        r.line(format!("remarks: {confirmed}/{total} coincidences confirmed"));
    }
    Ok(r)
}

fn algebra_document(path: &Path, extra: &Bindings) -> Result<Algebra<Gq>, CliError> {
    let doc = read_document(path)?;
    let Payload::Algebra(a) = &doc.payload else {
        return Err(CliError::Usage(format!("{}: expected an algebra document", path.display())));
    };
    Ok(algebra_at(a, &doc.bindings(extra)?)?)
}

fn cmd_iso(verify: Option<&Path>, search: &[PathBuf], strict: bool, params: &Params) -> Result<Report, CliError> {
    let extra = parse_params(params)?;
    let mut r = Report::new();
    if let Some(path) = verify {
        let doc = read_document(path)?;
        let Payload::IsoWitness { source, target, t } = &doc.payload else {
            return Err(CliError::Usage(format!("{}: expected an iso_witness document", path.display())));
        };
        let b = doc.bindings(&extra)?;
        let ok = verify_lsa_iso(&algebra_at(source, &b)?, &algebra_at(target, &b)?, &matrix_at(t, &b)?)?;
        r.check("witness", ok, "");
        return Ok(r);
    }
    let [a, b] = search else {
        return Err(CliError::Usage("give --verify FILE or --search A B".into()));
    };
    let verdict = search_lsa_iso(&algebra_document(a, &extra)?, &algebra_document(b, &extra)?);
    match &verdict {
        IsoVerdict::Isomorphic(t) => {
            r.line("verdict: isomorphic");
            r.line(format!("T = {}", t.transpose()));
        }
        IsoVerdict::NotIsomorphic(diffs) => {
            r.line("verdict: not isomorphic");
            for d in diffs {
                r.line(format!("  {d}"));
            }
        }
        IsoVerdict::Unknown(why) => {
            r.line(format!("verdict: unknown ({why})"));
            r.ok = !strict;
        }
    }
    Ok(r)
}

fn cmd_fingerprint(file: &Path, params: &Params) -> Result<Report, CliError> {
    let a = algebra_document(file, &parse_params(params)?)?;
    Ok(Report { text: fingerprint(&a).to_string(), ok: true })
}

fn cmd_catalog_show(id: &str, params: &Params) -> Result<Report, CliError> {
    let cat = load_catalog()?;
    let e = cat.lookup(id)?;
    let b = parse_params(params)?;
    let mut text = String::new();
    if let Some(case) = &e.case {
        let _ = writeln!(text, "# {} ({}), family {}", e.id, case, e.family.name());
    } else {
        let _ = writeln!(text, "# {}, family {}", e.id, e.family.name());
    }
    if b.is_empty() && !e.free_params().is_empty() {
        let params: Vec<Constraint> = e.constraints.clone();
        let doc = Document { dim: 3, domain: Domain::RatFunc, params, payload: Payload::Algebra(e.table.clone()) };
        text.push_str(&doc.emit());
    } else {
        let full = e.complete(&b)?;
        if !full.is_empty() {
            let _ = writeln!(text, "# at {}", format_bindings(&full));
        }
        text.push_str(&Document::from_algebra(&e.instantiate(&full)?).emit());
    }
    Ok(Report { text, ok: true })
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Check { file, params } => cmd_check(&file, &params),
        Command::CocycleBuild { file, params } => cmd_cocycle_build(&file, &params),
        Command::CatalogVerify { family, entry, all, params } => {
            cmd_catalog_verify(&family, entry.as_deref(), all, &params)
        }
        Command::Iso { verify, search, strict, params } => cmd_iso(verify.as_deref(), &search, strict, &params),
        Command::Fingerprint { file, params } => cmd_fingerprint(&file, &params),
        Command::CatalogShow { id, params } => cmd_catalog_show(&id, &params),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            if report.ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
