//! `a2zeta`: build quotient complexes, compute their L-functions and check
//! the identities between them.
//!
//! Exit codes: 0 when everything requested passes, 1 for usage, input or
//! domain errors, 2 when the complex fails validation, 3 when an identity
//! fails.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use a2zeta_core::builders::{
    build_projective_plane, complex_from_presentation, find_presentation, q2_presentation, q2_trivial_complex,
    q2_z3_complex, PresentationData, TrianglePresentation, VoltageAssignment,
};
use a2zeta_core::complex::{parse_complex, serialize_complex, validate, QuotientComplex, ValidationReport};
use a2zeta_core::cover::{build_cover, CoverSpec};
use a2zeta_core::group::Perm;
use a2zeta_core::lfun::{self, LReport, ReportData, Verdict};
use a2zeta_core::operators::build_operators;
use a2zeta_core::rep::{natural_representation, regular_representation, Representation, RepresentationData};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "a2zeta", version, about = "Artin L-functions of finite quotients of the PGL3 building")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a one-vertex complex from a triangle presentation.
    Build {
        #[arg(long)]
        q: u32,
        /// Presentation file; defaults to the first one found by search.
        #[arg(long)]
        presentation: Option<PathBuf>,
        /// Representation file whose group generators `a0, a1, ...` give
        /// the voltages.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// As `--rep`, then take the cover defined by the group's action on
        /// the points it permutes.
        #[arg(long, conflicts_with = "rep")]
        cover: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run identity checks and emit a report.
    Check {
        #[arg(value_enum, default_value_t = CheckKind::All)]
        which: CheckKind,
        #[command(flatten)]
        input: Input,
        /// Re-check the polynomials of a saved report instead of computing
        /// them (identity and degree checks only).
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print P0, P1, P2 and their degrees.
    Lfun {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Complex file, or one of the built-ins `q2`, `q2-z3`, `q2-z3-cover`.
    #[arg(long, default_value = "q2")]
    complex: String,
    /// `trivial`, `permutation` (the voltage group acting on its points),
    /// `regular`, or a representation file.
    #[arg(long, default_value = "trivial")]
    rep: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    Identity,
    Functional,
    Induction,
    Cohomology,
    Operators,
    Trace,
    Degrees,
    Structure,
    All,
}

enum Outcome {
    Pass,
    Invalid,
    IdentityFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Invalid) => ExitCode::from(2),
        Ok(Outcome::IdentityFailed) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("A2ZETA_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("A2ZETA_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring the thread pool")
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Build {
            q,
            presentation,
            rep,
            cover,
            format,
            out,
        } => cmd_build(q, presentation.as_deref(), rep.as_deref(), cover.as_deref(), format, out.as_deref()),
        Command::Check {
            which,
            input,
            report,
            n_max,
            format,
            out,
        } => cmd_check(which, &input, report.as_deref(), n_max as usize, format, out.as_deref()),
        Command::Lfun { input, format, out } => cmd_lfun(&input, format, out.as_deref()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_presentation(q: u32, path: Option<&Path>) -> Result<TrianglePresentation> {
    if let Some(p) = path {
        let data: PresentationData = serde_json::from_str(&read(p)?).context("parsing presentation")?;
        if data.q != q {
            bail!("presentation is for q = {}, not {q}", data.q);
        }
        return Ok(TrianglePresentation::from_data(&data)?);
    }
    match q {
        2 => Ok(q2_presentation()),
        3 => {
            let plane = build_projective_plane(3)?;
            find_presentation(&plane).ok_or_else(|| {
                anyhow!("q = 3 has no torsion-free one-vertex presentation: 52 incident pairs do not split into triples")
            })
        }
        _ => bail!("unsupported q = {q} (supported: 2, 3)"),
    }
}

fn load_voltages(t: &TrianglePresentation, path: &Path) -> Result<VoltageAssignment> {
    let data: RepresentationData = serde_json::from_str(&read(path)?).context("parsing representation file")?;
    let images: Vec<Perm> = (0..t.plane().len())
        .map(|x| {
            let label = TrianglePresentation::generator_label(x);
            data.group
                .generators
                .get(&label)
                .cloned()
                .ok_or_else(|| anyhow!("representation file has no image for generator {label}"))
        })
        .collect::<Result<_>>()?;
    Ok(VoltageAssignment::new(t, images)?)
}

fn cmd_build(
    q: u32,
    presentation: Option<&Path>,
    rep: Option<&Path>,
    cover: Option<&Path>,
    format: Format,
    out: Option<&Path>,
) -> Result<Outcome> {
    if !matches!(q, 2 | 3) {
        bail!("unsupported q = {q} (supported: 2, 3)");
    }
    let t = load_presentation(q, presentation)?;
    let phi = match rep.or(cover) {
        Some(p) => load_voltages(&t, p)?,
        None => VoltageAssignment::trivial(&t),
    };
    let mut c = complex_from_presentation(&t, &phi);
    if cover.is_some() {
        c = build_cover(&CoverSpec::natural(&c))?.complex;
    }
    let report = validate(&c);
    let json = serialize_complex(&c);
    match (format, out) {
        (Format::Text, Some(_)) => {
            emit(out, &json)?;
            emit(None, &summary(&c, &report))?;
        }
        _ => emit(out, &json)?,
    }
    if !report.passed() {
        eprint!("{report}");
        return Ok(Outcome::Invalid);
    }
    Ok(Outcome::Pass)
}

fn summary(c: &QuotientComplex, report: &ValidationReport) -> String {
    let [n0, n1, n2] = c.counts();
    format!(
        "q = {}, N = [{n0}, {n1}, {n2}], chi = {}, voltage group of order {}\n{report}",
        c.q(),
        c.euler_characteristic(),
        c.group().order()
    )
}

fn load_complex(name: &str) -> Result<QuotientComplex> {
    match name {
        "q2" => Ok(q2_trivial_complex()),
        "q2-z3" => Ok(q2_z3_complex()),
        "q2-z3-cover" => Ok(build_cover(&CoverSpec::natural(&q2_z3_complex()))?.complex),
        path => Ok(parse_complex(&read(Path::new(path))?).context("parsing complex")?),
    }
}

fn load_rep(c: &QuotientComplex, spec: &str) -> Result<Representation> {
    let g = c.group();
    let rho = match spec {
        "trivial" => Representation::trivial(g.clone()),
        "permutation" | "natural" => natural_representation(g),
        "regular" => regular_representation(g),
        path => {
            let data: RepresentationData =
                serde_json::from_str(&read(Path::new(path))?).context("parsing representation file")?;
            Representation::from_data(&data)?
        }
    };
    if !rho.group().same_elements(g) {
        bail!("group mismatch: the representation's group differs from the complex's voltage group");
    }
    Ok(rho)
}

fn structure_verdicts(report: &ValidationReport) -> Vec<Verdict> {
    report
        .checks
        .iter()
        .map(|c| {
            let detail = if c.passed() {
                "ok".to_string()
            } else {
                format!("{} offenders: {}", c.offenders.len(), c.offenders.join(", "))
            };
            Verdict::new(format!("structure.{}", c.name), c.passed(), detail)
        })
        .collect()
}

fn wants(which: CheckKind, kind: CheckKind) -> bool {
    which == CheckKind::All || which == kind
}

fn verdicts_for(which: CheckKind, c: &QuotientComplex, rho: &Representation, r: &LReport, n_max: usize) -> Result<Vec<Verdict>> {
    let mut v = Vec::new();
    if wants(which, CheckKind::Identity) {
        v.push(lfun::check_main_identity(r));
    }
    if wants(which, CheckKind::Degrees) {
        v.extend(lfun::degree_report(r).1);
    }
    if wants(which, CheckKind::Cohomology) || wants(which, CheckKind::Operators) {
        let ops = build_operators(c, rho)?;
        if wants(which, CheckKind::Cohomology) {
            v.extend(lfun::check_cohomological_theorem(&ops, r));
        }
        if wants(which, CheckKind::Operators) {
            v.extend(lfun::operator_identity_checks(&ops));
        }
    }
    if wants(which, CheckKind::Functional) {
        let dual = lfun::compute_l(c, &rho.dual())?;
        v.extend(lfun::functional_equation_checks(r, &dual));
        v.push(lfun::check_transpose_duality(c, rho)?);
    }
    if wants(which, CheckKind::Trace) {
        let (tally, tv) = lfun::check_trace_identity(c, rho, n_max)?;
        v.extend(tv);
        v.extend(lfun::check_log_derivative(r, &tally));
    }
    if wants(which, CheckKind::Induction) && c.group().order() > 1 {
        let cover = build_cover(&CoverSpec::natural(c))?;
        let sub = Representation::trivial(cover.complex.group().clone());
        v.extend(lfun::check_induction(c, &sub, &cover.complex)?);
        let base = lfun::compute_l(c, &Representation::trivial(c.group().clone()))?;
        let up = lfun::compute_l(&cover.complex, &sub)?;
        let (dv, quotients) = lfun::check_divisibility(&base, &up);
        v.extend(dv.into_iter().zip(quotients).map(|(mut verdict, quo)| {
            if let Some(quo) = quo {
                verdict.rhs = Some(quo.to_strings());
            }
            verdict
        }));
    }
    Ok(v)
}

fn render(data: &ReportData, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(data)? + "\n"),
        Format::Text => {
            let mut s = format!(
                "q = {}, d = {}, N = {:?}, chi = {}\nP0 (degree {}): {}\nP1 (degree {}): {}\nP2 (degree {}): {}\n",
                data.q,
                data.d,
                data.n,
                data.chi,
                data.degrees[0],
                join(&data.p0),
                data.degrees[1],
                join(&data.p1),
                data.degrees[2],
                join(&data.p2),
            );
            for v in &data.verdicts {
                s.push_str(&format!("{v}\n"));
            }
            Ok(s)
        }
    }
}

fn join(coeffs: &[String]) -> String {
    format!("[{}]", coeffs.join(", "))
}

fn cmd_check(
    which: CheckKind,
    input: &Input,
    report: Option<&Path>,
    n_max: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<Outcome> {
    if let Some(p) = report {
        let data: ReportData = serde_json::from_str(&read(p)?).context("parsing report")?;
        let r = LReport::from_data(&data)?;
        let mut v = Vec::new();
        if wants(which, CheckKind::Identity) {
            v.push(lfun::check_main_identity(&r));
        }
        if wants(which, CheckKind::Degrees) {
            v.extend(lfun::degree_report(&r).1);
        }
        if v.is_empty() {
            bail!("only identity and degree checks can run from a saved report");
        }
        return finish(&r, &v, format, out);
    }
    let c = load_complex(&input.complex)?;
    let rho = load_rep(&c, &input.rep)?;
    let structure = validate(&c);
    if !structure.passed() {
        eprint!("{structure}");
        let v = structure_verdicts(&structure);
        let data = ReportData {
            q: c.q(),
            d: rho.dim(),
            n: c.counts(),
            chi: c.euler_characteristic(),
            p0: Vec::new(),
            p1: Vec::new(),
            p2: Vec::new(),
            degrees: [0; 3],
            checks: lfun::summarize(&v),
            verdicts: v,
        };
        emit(out, &render(&data, format)?)?;
        return Ok(Outcome::Invalid);
    }
    let r = lfun::compute_l(&c, &rho)?;
    let mut v = Vec::new();
    if wants(which, CheckKind::Structure) {
        v.extend(structure_verdicts(&structure));
    }
    v.extend(verdicts_for(which, &c, &rho, &r, n_max)?);
    finish(&r, &v, format, out)
}

fn finish(r: &LReport, v: &[Verdict], format: Format, out: Option<&Path>) -> Result<Outcome> {
    emit(out, &render(&r.to_data(v), format)?)?;
    for failed in v.iter().filter(|x| !x.passed) {
        eprintln!("{failed}");
    }
    Ok(if v.iter().all(|x| x.passed) {
        Outcome::Pass
    } else {
        Outcome::IdentityFailed
    })
}

fn cmd_lfun(input: &Input, format: Format, out: Option<&Path>) -> Result<Outcome> {
    let c = load_complex(&input.complex)?;
    let rho = load_rep(&c, &input.rep)?;
    let structure = validate(&c);
    if !structure.passed() {
        eprint!("{structure}");
        return Ok(Outcome::Invalid);
    }
    let r = lfun::compute_l(&c, &rho)?;
    emit(out, &render(&r.to_data(&[]), format)?)?;
    Ok(Outcome::Pass)
}
