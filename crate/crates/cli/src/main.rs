//! Command-line front door: generate family hypergraphs, compute and compare
//! spectra, and run the verifier suite.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage/parse/IO errors.

mod render;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hyperspectra::closed_form::{
    complete_uniform_adjacency, complete_uniform_seidel, double_hyperstar_adjacency,
    double_hyperstar_seidel, hyperstar_adjacency, hyperstar_seidel, sunflower_adjacency,
    sunflower_seidel, ClosedFormSpectrum,
};
use hyperspectra::eigen::{
    eigen_symmetric, main_count_via_rank, main_eigenvalues, DEFAULT_GROUP_TOL, DEFAULT_MAIN_TOL,
};
use hyperspectra::format::{from_hg, to_hg};
use hyperspectra::hypergraph::{Family, Hypergraph};
use hyperspectra::matrix::{adjacency_matrix, seidel_matrix, walk_table, IntSymMatrix};
use hyperspectra::structure::{canonical_partition, quotient_matrix, spectrum_containment};
use hyperspectra::{Error, Result};

use render::{describe_kind, sig12, OutputFormat};
use verify::{run_checks, Check, TargetReport, VerifyConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixKind {
    Adjacency,
    Seidel,
}

/// Closed-form spectrum for a tagged family, when one exists in bounds.
pub fn family_closed_form(
    family: &Family,
    matrix: MatrixKind,
) -> Option<Result<ClosedFormSpectrum>> {
    let cf = match (*family, matrix) {
        (Family::Hyperstar { n, k }, MatrixKind::Adjacency) => hyperstar_adjacency(n, k),
        (Family::Hyperstar { n, k }, MatrixKind::Seidel) => hyperstar_seidel(n, k),
        (Family::Complete { n, r }, MatrixKind::Adjacency) => complete_uniform_adjacency(n, r),
        (Family::Complete { n, r }, MatrixKind::Seidel) => complete_uniform_seidel(n, r),
        (Family::Sunflower { k }, MatrixKind::Adjacency) => sunflower_adjacency(k),
        (Family::Sunflower { k }, MatrixKind::Seidel) => sunflower_seidel(k),
        (Family::DoubleHyperstar { n1, n2, k }, MatrixKind::Adjacency) => {
            double_hyperstar_adjacency(n1, n2, k)
        }
        (Family::DoubleHyperstar { n1, n2, k }, MatrixKind::Seidel) => {
            double_hyperstar_seidel(n1, n2, k)
        }
    };
    match cf {
        // out-of-bounds parameters (e.g. a 2-edge hyperstar) simply have no
        // closed form to attach
        Err(Error::InvalidParameter(_)) => None,
        other => Some(other),
    }
}

#[derive(Parser)]
#[command(
    name = "hyperspectra",
    about = "Adjacency and Seidel spectra of uniform hypergraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Path to a ".hg" hypergraph file.
    #[arg(long, short)]
    input: PathBuf,

    /// Which matrix to analyze.
    #[arg(long, value_enum, default_value = "seidel")]
    matrix: MatrixKind,

    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Eigenvalue grouping tolerance.
    #[arg(long, default_value_t = DEFAULT_GROUP_TOL)]
    tol_group: f64,

    /// Write the analyzed matrix to this path (plain text: n, then rows).
    #[arg(long)]
    dump_matrix: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family hypergraph and write it as a ".hg" file.
    Gen {
        /// Family: hyperstar, double-hyperstar, sunflower, complete, power.
        family: String,
        /// Family parameters (hyperstar: N K; double-hyperstar: N1 N2 K;
        /// sunflower: K; complete: N R; power: K with --base).
        params: Vec<usize>,
        /// Output path (defaults to a name derived from the parameters).
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// 2-uniform base graph for `power`, as a ".hg" file.
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Grouped spectrum, energy, and main-eigenvalue flags of an input.
    Spectrum(InputArgs),
    /// Energy (sum of absolute eigenvalues) of an input.
    Energy(InputArgs),
    /// Canonical-partition quotient matrix and containment check.
    Quotient(InputArgs),
    /// Exact walk counts N_0..N_L.
    Walks {
        #[command(flatten)]
        common: InputArgs,
        /// Largest walk length.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Main eigenvalues by eigenspace projection and exact Krylov rank.
    MainEigs(InputArgs),
    /// Run verifier checks over an input file or a family sweep.
    Verify {
        /// Path to a ".hg" hypergraph file (alternative to --family).
        #[arg(long, short, conflicts_with = "family")]
        input: Option<PathBuf>,
        /// Family sweep: hyperstar, double-hyperstar, sunflower, complete.
        #[arg(long)]
        family: Option<String>,
        /// Range for n (e.g. "3..8" or "5").
        #[arg(long)]
        n: Option<String>,
        /// Range for k.
        #[arg(long)]
        k: Option<String>,
        /// Range for n1 (double hyperstar).
        #[arg(long)]
        n1: Option<String>,
        /// Range for n2 (double hyperstar).
        #[arg(long)]
        n2: Option<String>,
        /// Range for r (complete).
        #[arg(long)]
        r: Option<String>,
        /// Checks to run.
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        checks: Vec<Check>,
        /// Seed for deterministic sample points.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Pass threshold for pointwise identity checks.
        #[arg(long, default_value_t = 1e-6)]
        tol_verify: f64,
        /// Eigenvalue grouping tolerance.
        #[arg(long, default_value_t = DEFAULT_GROUP_TOL)]
        tol_group: f64,
        /// Output format (verification reports default to JSON).
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            family,
            params,
            out,
            base,
        } => cmd_gen(&family, &params, out, base),
        Command::Spectrum(args) => cmd_spectrum(&args),
        Command::Energy(args) => cmd_energy(&args),
        Command::Quotient(args) => cmd_quotient(&args),
        Command::Walks { common, max_len } => cmd_walks(&common, max_len),
        Command::MainEigs(args) => cmd_main_eigs(&args),
        Command::Verify {
            input,
            family,
            n,
            k,
            n1,
            n2,
            r,
            checks,
            seed,
            tol_verify,
            tol_group,
            format,
        } => cmd_verify(
            input, family, n, k, n1, n2, r, &checks, seed, tol_verify, tol_group, format,
        ),
    }
}

fn load(path: &Path) -> Result<Hypergraph> {
    from_hg(&fs::read_to_string(path)?)
}

fn dump_matrix_if_asked(args: &InputArgs, m: &IntSymMatrix) -> Result<()> {
    if let Some(path) = &args.dump_matrix {
        fs::write(path, m.dump())?;
    }
    Ok(())
}

fn build_matrix(h: &Hypergraph, kind: MatrixKind) -> IntSymMatrix {
    match kind {
        MatrixKind::Adjacency => adjacency_matrix(h),
        MatrixKind::Seidel => seidel_matrix(h),
    }
}

fn matrix_name(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Adjacency => "adjacency",
        MatrixKind::Seidel => "seidel",
    }
}

fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive, got {value}"
        )))
    }
}

/// `{kind, params, multiplicity, value}` form of one closed-form descriptor.
fn descriptor_json(d: &hyperspectra::EigDescriptor) -> serde_json::Value {
    let serde_json::Value::Object(mut fields) = serde_json::to_value(&d.kind).unwrap() else {
        unreachable!("descriptor kinds serialize as objects")
    };
    let kind = fields.remove("kind").unwrap();
    serde_json::json!({
        "kind": kind,
        "params": serde_json::Value::Object(fields),
        "multiplicity": d.multiplicity,
        "value": d.value(),
    })
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

fn cmd_gen(
    family: &str,
    params: &[usize],
    out: Option<PathBuf>,
    base: Option<PathBuf>,
) -> Result<bool> {
    let arity_error = |expected: &str| {
        Error::InvalidParameter(format!("{family} takes {expected}, got {params:?}"))
    };
    let h = match family {
        "hyperstar" => match params {
            [n, k] => Hypergraph::hyperstar(*n, *k)?,
            _ => return Err(arity_error("N K")),
        },
        "double-hyperstar" => match params {
            [n1, n2, k] => Hypergraph::double_hyperstar(*n1, *n2, *k)?,
            _ => return Err(arity_error("N1 N2 K")),
        },
        "sunflower" => match params {
            [k] => Hypergraph::sunflower(*k)?,
            _ => return Err(arity_error("K")),
        },
        "complete" => match params {
            [n, r] => Hypergraph::complete_uniform(*n, *r)?,
            _ => return Err(arity_error("N R")),
        },
        "power" => {
            let [k] = params else {
                return Err(arity_error("K (with --base FILE)"));
            };
            let Some(base_path) = base else {
                return Err(Error::InvalidParameter(
                    "power needs --base FILE with a 2-uniform base graph".into(),
                ));
            };
            let base_h = load(&base_path)?;
            let mut pairs = Vec::new();
            for e in base_h.edges() {
                match e.as_slice() {
                    [a, b] => pairs.push((*a, *b)),
                    _ => {
                        return Err(Error::InvalidParameter(
                            "power base graph must be 2-uniform".into(),
                        ))
                    }
                }
            }
            Hypergraph::power(&pairs, base_h.order(), *k)?
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown family {other:?}; expected hyperstar, double-hyperstar, sunflower, complete, or power"
            )))
        }
    };

    let path = out.unwrap_or_else(|| {
        let tags: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        PathBuf::from(format!("{family}_{}.hg", tags.join("_")))
    });
    fs::write(&path, to_hg(&h))?;

    let report = h.validate();
    println!(
        "wrote {} ({} vertices, {} edges)",
        path.display(),
        h.order(),
        h.edges().len()
    );
    println!(
        "rank {}  corank {}  uniform k: {}  regular r: {}",
        report.rank,
        report.corank,
        report.uniform_k.map_or("-".into(), |k| k.to_string()),
        report.regular_r.map_or("-".into(), |r| r.to_string()),
    );
    Ok(true)
}

// ---------------------------------------------------------------------------
// spectrum / energy
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GroupRow {
    value: f64,
    multiplicity: usize,
    is_main: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_value: Option<f64>,
}

#[derive(Serialize)]
struct SpectrumReport {
    input: String,
    matrix: &'static str,
    order: usize,
    tol_group: f64,
    energy: f64,
    groups: Vec<GroupRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_energy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_descriptors: Option<Vec<serde_json::Value>>,
}

fn spectrum_report(args: &InputArgs) -> Result<SpectrumReport> {
    ensure_positive("--tol-group", args.tol_group)?;
    let h = load(&args.input)?;
    let m = build_matrix(&h, args.matrix);
    dump_matrix_if_asked(args, &m)?;
    let decomp = eigen_symmetric(&m)?;
    let groups = main_eigenvalues(&decomp, args.tol_group, DEFAULT_MAIN_TOL);
    let energy: f64 = decomp.values.iter().map(|v| v.abs()).sum();

    let closed = h
        .family()
        .and_then(|f| family_closed_form(&f, args.matrix))
        .transpose()?;
    let rows = groups
        .iter()
        .map(|g| {
            let near: Vec<(&hyperspectra::EigDescriptor, f64)> = closed
                .iter()
                .flat_map(|cf| cf.descriptors.iter())
                .map(|d| (d, d.value()))
                .filter(|(_, v)| (v - g.value).abs() <= 1e-6)
                .collect();
            GroupRow {
                value: g.value,
                multiplicity: g.multiplicity,
                is_main: g.is_main,
                closed_form: (!near.is_empty()).then(|| {
                    near.iter()
                        .map(|(d, _)| describe_kind(&d.kind))
                        .collect::<Vec<_>>()
                        .join(", ")
                }),
                closed_form_value: near.first().map(|(_, v)| *v),
            }
        })
        .collect();

    Ok(SpectrumReport {
        input: args.input.display().to_string(),
        matrix: matrix_name(args.matrix),
        order: h.order(),
        tol_group: args.tol_group,
        energy,
        groups: rows,
        closed_form_energy: closed.as_ref().map(ClosedFormSpectrum::energy),
        closed_form_descriptors: closed
            .as_ref()
            .map(|cf| cf.descriptors.iter().map(descriptor_json).collect()),
    })
}

fn cmd_spectrum(args: &InputArgs) -> Result<bool> {
    let report = spectrum_report(args)?;
    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        OutputFormat::Csv => {
            println!("value,multiplicity,is_main,closed_form_value");
            for g in &report.groups {
                println!(
                    "{},{},{},{}",
                    sig12(g.value),
                    g.multiplicity,
                    g.is_main,
                    g.closed_form_value.map_or(String::new(), sig12)
                );
            }
        }
        OutputFormat::Text => {
            println!(
                "{}: {} matrix, order {}, energy {}",
                report.input, report.matrix, report.order, report.energy
            );
            println!("{:>18}  {:>4}  {:>4}  closed form", "value", "mult", "main");
            for g in &report.groups {
                println!(
                    "{:>18.12}  {:>4}  {:>4}  {}",
                    g.value,
                    g.multiplicity,
                    if g.is_main { "yes" } else { "no" },
                    g.closed_form.as_deref().unwrap_or("-")
                );
            }
            if let Some(e) = report.closed_form_energy {
                println!("closed-form energy: {e}");
            }
        }
    }
    Ok(true)
}

fn cmd_energy(args: &InputArgs) -> Result<bool> {
    let report = spectrum_report(args)?;
    match args.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct EnergyReport<'a> {
                input: &'a str,
                matrix: &'static str,
                energy: f64,
                #[serde(skip_serializing_if = "Option::is_none")]
                closed_form_energy: Option<f64>,
            }
            let doc = EnergyReport {
                input: &report.input,
                matrix: report.matrix,
                energy: report.energy,
                closed_form_energy: report.closed_form_energy,
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        OutputFormat::Csv => println!("energy\n{}", sig12(report.energy)),
        OutputFormat::Text => match report.closed_form_energy {
            Some(cf) => println!("{} (closed form {})", report.energy, cf),
            None => println!("{}", report.energy),
        },
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// quotient
// ---------------------------------------------------------------------------

fn cmd_quotient(args: &InputArgs) -> Result<bool> {
    let h = load(&args.input)?;
    let Some(family) = h.family() else {
        return Err(Error::InvalidParameter(
            "quotient needs family metadata (a '# family=...' header) to pick the canonical partition"
                .into(),
        ));
    };
    let m = build_matrix(&h, args.matrix);
    dump_matrix_if_asked(args, &m)?;
    let p = canonical_partition(&family)?;
    let q = quotient_matrix(&m, &p)?;
    let q_values = q.eigenvalues(&p)?;
    let m_values = eigen_symmetric(&m)?.values;
    let contained = spectrum_containment(&q_values, &m_values, 1e-8);

    #[derive(Serialize)]
    struct QuotientReport {
        input: String,
        matrix: &'static str,
        blocks: Vec<usize>,
        equitable: bool,
        q: Vec<Vec<f64>>,
        eigenvalues: Vec<f64>,
        contained: bool,
    }
    let report = QuotientReport {
        input: args.input.display().to_string(),
        matrix: matrix_name(args.matrix),
        blocks: p.blocks().iter().map(Vec::len).collect(),
        equitable: q.equitable,
        q: q.q.clone(),
        eigenvalues: q_values,
        contained,
    };
    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => {
            println!(
                "{}: {} quotient over blocks {:?} (equitable: {}, contained: {})",
                report.input, report.matrix, report.blocks, report.equitable, report.contained
            );
            for row in &report.q {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>8}")).collect();
                println!("  [{}]", cells.join(" "));
            }
            let vals: Vec<String> = report.eigenvalues.iter().map(|v| sig12(*v)).collect();
            println!("eigenvalues: {}", vals.join(", "));
        }
    }
    Ok(report.equitable && contained)
}

// ---------------------------------------------------------------------------
// walks
// ---------------------------------------------------------------------------

fn cmd_walks(args: &InputArgs, max_len: usize) -> Result<bool> {
    let h = load(&args.input)?;
    dump_matrix_if_asked(args, &adjacency_matrix(&h))?;
    let table = walk_table(&h, max_len);
    let report = h.validate();
    let closed: Option<Vec<String>> = match (report.uniform_k, report.regular_r) {
        (Some(k), Some(r)) => Some(
            (0..=max_len)
                .map(|l| {
                    hyperspectra::closed_form::regular_walk_count(h.order(), k, r, l).to_string()
                })
                .collect(),
        ),
        _ => None,
    };

    match args.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct WalkReport {
                input: String,
                counts: Vec<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                regular_closed_form: Option<Vec<String>>,
            }
            let doc = WalkReport {
                input: args.input.display().to_string(),
                counts: table.counts.iter().map(|c| c.to_string()).collect(),
                regular_closed_form: closed,
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        OutputFormat::Csv => {
            println!("l,walks");
            for (l, c) in table.counts.iter().enumerate() {
                println!("{l},{c}");
            }
        }
        OutputFormat::Text => {
            println!("{:>3}  {:>24}  closed form", "l", "walks");
            for (l, c) in table.counts.iter().enumerate() {
                let cf = closed.as_ref().map_or("-".to_string(), |v| v[l].clone());
                println!("{l:>3}  {c:>24}  {cf}");
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// main-eigs
// ---------------------------------------------------------------------------

fn cmd_main_eigs(args: &InputArgs) -> Result<bool> {
    let h = load(&args.input)?;
    let m = build_matrix(&h, args.matrix);
    dump_matrix_if_asked(args, &m)?;
    let decomp = eigen_symmetric(&m)?;
    let groups = main_eigenvalues(&decomp, args.tol_group, DEFAULT_MAIN_TOL);
    let projection_count = groups.iter().filter(|g| g.is_main).count();
    let krylov_rank = main_count_via_rank(&m);

    #[derive(Serialize)]
    struct MainReport {
        input: String,
        matrix: &'static str,
        groups: Vec<hyperspectra::MainEigenvalue>,
        projection_count: usize,
        krylov_rank: usize,
        consistent: bool,
    }
    let report = MainReport {
        input: args.input.display().to_string(),
        matrix: matrix_name(args.matrix),
        groups,
        projection_count,
        krylov_rank,
        consistent: projection_count == krylov_rank,
    };
    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => {
            for g in &report.groups {
                println!(
                    "{:>18.12}  mult {:>3}  {}",
                    g.value,
                    g.multiplicity,
                    if g.is_main { "main" } else { "-" }
                );
            }
            println!(
                "projection count {}  krylov rank {}  consistent: {}",
                report.projection_count, report.krylov_rank, report.consistent
            );
        }
    }
    Ok(report.consistent)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn parse_range(raw: &str, what: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| {
            Error::InvalidParameter(format!("bad {what} range {raw:?}: {s:?} is not a number"))
        })
    };
    match raw.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let v = parse(raw)?;
            Ok((v, v))
        }
    }
}

fn range_or(opt: &Option<String>, what: &str, default: (usize, usize)) -> Result<(usize, usize)> {
    match opt {
        Some(s) => parse_range(s, what),
        None => Ok(default),
    }
}

fn sweep_targets(
    family: &str,
    n: &Option<String>,
    k: &Option<String>,
    n1: &Option<String>,
    n2: &Option<String>,
    r: &Option<String>,
) -> Result<Vec<(String, Hypergraph)>> {
    let mut out = Vec::new();
    match family {
        "hyperstar" => {
            let (n0, n9) = range_or(n, "n", (3, 8))?;
            let (k0, k9) = range_or(k, "k", (2, 6))?;
            for n in n0..=n9 {
                for k in k0..=k9 {
                    out.push((format!("hyperstar({n},{k})"), Hypergraph::hyperstar(n, k)?));
                }
            }
        }
        "complete" => {
            let (n0, n9) = range_or(n, "n", (3, 8))?;
            for n in n0..=n9 {
                let (r0, r9) = range_or(r, "r", (2, n))?;
                for r in r0..=r9.min(n) {
                    out.push((
                        format!("complete({n},{r})"),
                        Hypergraph::complete_uniform(n, r)?,
                    ));
                }
            }
        }
        "double-hyperstar" => {
            let (a0, a9) = range_or(n1, "n1", (2, 5))?;
            let (b0, b9) = range_or(n2, "n2", (2, 5))?;
            let (k0, k9) = range_or(k, "k", (3, 5))?;
            for n1 in a0..=a9 {
                for n2 in b0..=b9 {
                    for k in k0..=k9 {
                        out.push((
                            format!("double-hyperstar({n1},{n2},{k})"),
                            Hypergraph::double_hyperstar(n1, n2, k)?,
                        ));
                    }
                }
            }
        }
        "sunflower" => {
            let (k0, k9) = range_or(k, "k", (2, 8))?;
            for k in k0..=k9 {
                out.push((format!("sunflower({k})"), Hypergraph::sunflower(k)?));
            }
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown family {other:?} for sweeps"
            )))
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    input: Option<PathBuf>,
    family: Option<String>,
    n: Option<String>,
    k: Option<String>,
    n1: Option<String>,
    n2: Option<String>,
    r: Option<String>,
    checks: &[Check],
    seed: u64,
    tol_verify: f64,
    tol_group: f64,
    format: OutputFormat,
) -> Result<bool> {
    ensure_positive("--tol-verify", tol_verify)?;
    ensure_positive("--tol-group", tol_group)?;
    let cfg = VerifyConfig {
        seed,
        tol_verify,
        tol_group,
    };
    let targets: Vec<(String, Hypergraph)> = match (&input, &family) {
        (Some(path), None) => vec![(path.display().to_string(), load(path)?)],
        (None, Some(fam)) => sweep_targets(fam, &n, &k, &n1, &n2, &r)?,
        _ => {
            return Err(Error::InvalidParameter(
                "verify needs exactly one of --input or --family".into(),
            ))
        }
    };

    let mut reports: Vec<TargetReport> = Vec::with_capacity(targets.len());
    for (name, h) in &targets {
        reports.push(run_checks(name, h, checks, &cfg)?);
    }
    let pass = reports.iter().all(|t| t.checks.iter().all(|c| !c.failed()));

    #[derive(Serialize)]
    struct VerifyReport {
        pass: bool,
        seed: u64,
        tol_verify: f64,
        tol_group: f64,
        targets: Vec<TargetReport>,
    }
    let doc = VerifyReport {
        pass,
        seed,
        tol_verify,
        tol_group,
        targets: reports,
    };
    match format {
        OutputFormat::Text | OutputFormat::Csv => {
            for t in &doc.targets {
                for c in &t.checks {
                    println!(
                        "{}\t{}\t{}{}",
                        t.hypergraph,
                        c.check,
                        c.status,
                        c.detail
                            .as_deref()
                            .map(|d| format!("\t{d}"))
                            .unwrap_or_default()
                    );
                }
            }
            println!("overall: {}", if doc.pass { "pass" } else { "FAIL" });
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
    }
    Ok(pass)
}
