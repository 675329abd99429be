use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use sbk_core::autos::{fermionic_normal_step, verify_equivalence, NormalStatus};
use sbk_core::bialgebra::{block_split, coboundary_delta, RMatrixFile};
use sbk_core::catalog::{self, RMatrixTemplate};
use sbk_core::cybe::{ad_invariant, is_cybe, schouten_square};
use sbk_core::linsolve::{coboundary_solve, cocycle_space, export_cocycle_space};
use sbk_core::report::{Check, Report, Verdict};
use sbk_core::sampling::Sampler;
use sbk_core::scalar::{format_rational, parse_rational};
use sbk_core::superkernel::{verify_lie_superalgebra, AlgebraFile};
use sbk_core::suite::{self, bialgebra_verdict, DEFAULT_SAMPLES};
use sbk_core::{Error, QAlgebra, QRMatrix, Rational, Scalar};

#[derive(Parser)]
#[command(name = "sbk", version, about = "Exact checks for Lie super-bialgebras and classical r-matrices")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for all random sampling.
    #[arg(long, env = "SBK_SEED", default_value_t = 42, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Lie superalgebra axioms of a built-in algebra or a JSON algebra file.
    VerifyAlgebra {
        algebra: String,
        /// Write the algebra as a JSON file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Dimension of the cocycle space, and a coboundary solution for each basis element.
    CocycleSpace {
        algebra: String,
        /// Write the basis as JSON.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Validate an r-matrix: invariants, cobracket axioms, compatibility and CYBE.
    CheckR {
        algebra: String,
        /// Catalog template id or a JSON r-matrix file.
        r: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Check every point of the {0, 1, 2} parameter grid.
        #[arg(long)]
        grid: bool,
        /// Random points for templates with rational entries.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Evaluate the Schouten square [[r, r]] and its ad-invariance.
    Cybe {
        algebra: String,
        r: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// List the nonzero entries of [[r, r]].
        #[arg(long)]
        show_tensor: bool,
    },
    /// Verify equivalence witnesses by exact sampling.
    Equiv {
        /// Witness id, or `self:<template>` for the identity witness.
        #[arg(required_unless_present_any = ["all", "list"])]
        witness: Option<String>,
        #[arg(long, conflicts_with = "witness")]
        all: bool,
        /// Print the witness table instead of checking it.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Apply the swap and r_WW congruence normalization.
    NormalStep {
        algebra: String,
        r: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Run the full acceptance suite.
    Report,
    /// Print catalog data as JSON: an algebra, an instantiated template, or the witness table.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        id: Option<String>,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// List catalog template ids with their parameters.
    Templates,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Algebra,
    R,
    Witnesses,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Report(report)) => {
            let body = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(&body);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Raw(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

enum Outcome {
    Report(Report),
    Raw(String),
}

fn command_echo() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("sbk {}", args.join(" "))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let seed = cli.seed;
    let checks = match &cli.command {
        Command::VerifyAlgebra { algebra, export } => {
            let alg = load_algebra(algebra)?;
            if let Some(path) = export {
                write(path, &AlgebraFile::from_algebra(&alg).to_json())?;
            }
            verify_algebra(&alg)
        }
        Command::CocycleSpace { algebra, export } => {
            let alg = load_algebra(algebra)?;
            cocycle(&alg, export.as_deref())?
        }
        Command::CheckR { algebra, r, params, grid, samples } => {
            let alg = load_algebra(algebra)?;
            check_r(&alg, r, params, *grid, *samples, seed)?
        }
        Command::Cybe { algebra, r, params, show_tensor } => {
            let alg = load_algebra(algebra)?;
            let (label, r) = single_r(&alg, r, params)?;
            cybe(&alg, &label, &r, *show_tensor)?
        }
        Command::Equiv { witness, all, list, samples } => {
            if *list {
                return Ok(Outcome::Raw(witness_table()));
            }
            if *all {
                equiv_all(*samples, seed)?
            } else {
                let id = witness.as_deref().ok_or_else(|| anyhow!("a witness id or --all is required"))?;
                vec![equiv_one(id, *samples, seed)?]
            }
        }
        Command::NormalStep { algebra, r, params } => {
            let alg = load_algebra(algebra)?;
            let (label, r) = single_r(&alg, r, params)?;
            normal_step(&alg, &label, &r)?
        }
        Command::Report => suite::acceptance(seed),
        Command::Export { kind, id, params } => return export(*kind, id.as_deref(), params).map(Outcome::Raw),
        Command::Templates => return Ok(Outcome::Raw(template_table())),
    };
    Ok(Outcome::Report(Report::new(command_echo(), seed, checks)))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_algebra(name: &str) -> Result<QAlgebra> {
    match catalog::algebra(name) {
        Ok(a) => Ok(a),
        Err(Error::UnknownAlgebra(_)) if Path::new(name).is_file() => {
            let text = std::fs::read_to_string(name).with_context(|| format!("reading {name}"))?;
            Ok(AlgebraFile::from_json(&text)?.build()?)
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_params(params: &[String]) -> Result<Vec<(String, Rational)>> {
    params
        .iter()
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| anyhow!("expected NAME=VALUE, got `{p}`"))?;
            let v = parse_rational(v.trim()).ok_or_else(|| anyhow!("`{v}` is not a rational number"))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

enum Source {
    Template(RMatrixTemplate),
    File(QRMatrix, bool),
}

fn resolve_r(alg: &QAlgebra, id: &str) -> Result<Source> {
    match catalog::r_template(id) {
        Ok(t) => {
            if t.algebra != alg.name() {
                bail!("template `{id}` lives on {}, not {}", t.algebra, alg.name());
            }
            Ok(Source::Template(t))
        }
        Err(Error::UnknownTemplate(_)) if Path::new(id).is_file() => {
            let text = std::fs::read_to_string(id).with_context(|| format!("reading {id}"))?;
            let file = RMatrixFile::from_json(&text)?;
            if file.algebra != alg.name() {
                bail!("r-matrix file is for {}, not {}", file.algebra, alg.name());
            }
            let loaded = file.load(alg)?;
            Ok(Source::File(loaded.r, loaded.normalized))
        }
        Err(e) => Err(e.into()),
    }
}

fn single_r(alg: &QAlgebra, id: &str, params: &[String]) -> Result<(String, QRMatrix)> {
    match resolve_r(alg, id)? {
        Source::Template(t) => {
            let pt = parse_params(params)?;
            let r = t.instantiate(&pt)?;
            Ok((format!("{} at {}", t.id, point(&pt)), r))
        }
        Source::File(r, _) => {
            if !params.is_empty() {
                bail!("--param applies to catalog templates only");
            }
            Ok((id.to_string(), r))
        }
    }
}

fn point(pt: &[(String, Rational)]) -> String {
    if pt.is_empty() {
        return "()".into();
    }
    pt.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect::<Vec<_>>().join(", ")
}

fn verify_algebra(alg: &QAlgebra) -> Vec<Check> {
    let rep = verify_lie_superalgebra(alg);
    rep.checks
        .iter()
        .map(|a| {
            let mut c = Check::new(format!("{:?}", a.axiom), format!("{} satisfies {:?}", alg.name(), a.axiom));
            for v in a.violations.iter().take(10) {
                let names: Vec<_> = v.iter().map(|&i| alg.generator_names()[i].as_str()).collect();
                c.fail(format!("violated at ({})", names.join(", ")));
            }
            if a.violations.len() > 10 {
                c.detail(format!("{} violations in total", a.violations.len()));
            }
            c
        })
        .collect()
}

fn cocycle(alg: &QAlgebra, export: Option<&Path>) -> Result<Vec<Check>> {
    let space = cocycle_space(alg);
    let mut dim = Check::new("cocycle-dimension", format!("cocycle space of {}", alg.name()));
    dim.detail(format!("dimension {}", space.dimension));
    dim.detail(format!("{} unknowns, rank {}", space.unknowns, space.rank));
    let mut cob = Check::new("coboundary", "every basis cocycle is a coboundary");
    for (i, f) in space.basis.iter().enumerate() {
        match coboundary_solve(alg, f)? {
            Some(r) => cob.detail(format!("basis {i}: r with {} nonzero entries", nonzero(&r))),
            None => cob.fail(format!("basis {i}: no r with delta_r = f")),
        }
    }
    if let Some(path) = export {
        write(path, &export_cocycle_space(alg, &space))?;
        dim.detail(format!("basis written to {}", path.display()));
    }
    Ok(vec![dim, cob])
}

fn nonzero(r: &QRMatrix) -> usize {
    let n = r.dim();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !r.get(i, j).is_negligible()).count()
}

fn r_checks(alg: &QAlgebra, id: &str, label: &str, r: &QRMatrix, claim: Option<bool>) -> Result<Check> {
    let mut c = Check::new(id, format!("{label} gives a Lie super-bialgebra"));
    if let Err(axioms) = bialgebra_verdict(alg, r)? {
        c.fail(format!("failed {axioms}"));
    }
    let cy = is_cybe(alg, r)?;
    c.detail(format!("CYBE: {cy}"));
    if let Some(expected) = claim {
        c.require(cy == expected, format!("CYBE claimed {expected}"));
    }
    Ok(c)
}

fn claimed_cybe(t: &RMatrixTemplate, pt: &[(String, Rational)]) -> Option<bool> {
    match t.cybe {
        catalog::CybeClaim::Always => Some(true),
        catalog::CybeClaim::IffXZero => Some(pt.iter().find(|(k, _)| k == "x").is_none_or(|(_, v)| v.is_negligible())),
        catalog::CybeClaim::Unclaimed => None,
    }
}

fn check_r(alg: &QAlgebra, id: &str, params: &[String], grid: bool, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let t = match resolve_r(alg, id)? {
        Source::File(r, normalized) => {
            let mut c = r_checks(alg, "r", id, &r, None)?;
            if normalized {
                c.detail("entries were projected to an even graded-antisymmetric r");
            }
            return Ok(vec![c]);
        }
        Source::Template(t) => t,
    };
    let given = parse_params(params)?;
    if !given.is_empty() || t.params.is_empty() {
        let r = t.instantiate(&given)?;
        let label = format!("{} at {}", t.id, point(&given));
        return Ok(vec![r_checks(alg, "point", &label, &r, claimed_cybe(&t, &given))?]);
    }
    let points = if grid || t.grid_sufficient() {
        t.grid()
    } else {
        let mut s = Sampler::new(seed);
        let mut pts = Vec::new();
        let mut draws = 0;
        while pts.len() < samples && draws < 100 * samples.max(1) {
            draws += 1;
            let pt: Vec<(String, Rational)> = t.params.iter().map(|p| (p.name.clone(), s.rational())).collect();
            if t.instantiate(&pt).is_ok() {
                pts.push(pt);
            }
        }
        pts
    };
    let width = points.len().to_string().len();
    let mut out = Vec::new();
    for (i, pt) in points.iter().enumerate() {
        let label = format!("{} at {}", t.id, point(pt));
        let id = format!("point-{i:0width$}");
        match t.instantiate(pt) {
            Ok(r) => out.push(r_checks(alg, &id, &label, &r, claimed_cybe(&t, pt))?),
            Err(Error::DivisionByZero(d)) => {
                let mut c = Check::new(id, label);
                c.verdict = Verdict::Skipped;
                c.detail(format!("outside the domain: {d} = 0"));
                out.push(c);
            }
            Err(e) => return Err(e.into()),
        }
    }
    if out.is_empty() {
        bail!("no point of `{}` lies in its domain", t.id);
    }
    Ok(out)
}

fn cybe(alg: &QAlgebra, label: &str, r: &QRMatrix, show: bool) -> Result<Vec<Check>> {
    let t = schouten_square(alg, r)?;
    let mut c = Check::new("cybe", format!("{label} satisfies the classical Yang-Baxter equation"));
    if !is_cybe(alg, r)? {
        c.fail(format!("[[r, r]] has {} nonzero entries", t.nonzero_entries().len()));
    }
    if show {
        for line in t.listing(alg).lines() {
            c.detail(line.to_string());
        }
    }
    let mut inv = Check::new("ad-invariant", "[[r, r]] is ad-invariant (modified CYBE)");
    inv.require(ad_invariant(alg, &t)?, "[[r, r]] is not ad-invariant");
    Ok(vec![c, inv])
}

fn equiv_one(id: &str, samples: usize, seed: u64) -> Result<Check> {
    let w = catalog::witness(id)?;
    let o = verify_equivalence(&w, samples, seed)?;
    let mut c = Check::new(w.id.clone(), format!("{} is equivalent to {}", w.source, w.target));
    c.verdict = o.verdict;
    c.detail(format!("{} samples in {} draws", o.samples, o.attempts));
    if let Some(d) = o.detail {
        c.detail(d);
    }
    Ok(c)
}

fn equiv_all(samples: usize, seed: u64) -> Result<Vec<Check>> {
    catalog::witness_list()
        .iter()
        .map(|w| match equiv_one(&w.id, samples, seed) {
            Err(e) if matches!(e.downcast_ref::<Error>(), Some(Error::EmptyDomain(_))) => {
                let mut c = Check::new(w.id.clone(), format!("{} is equivalent to {}", w.source, w.target));
                c.verdict = Verdict::Skipped;
                c.detail(format!("{e}"));
                Ok(c)
            }
            other => other,
        })
        .collect()
}

fn witness_table() -> String {
    let mut out = String::new();
    for w in catalog::witness_list() {
        let steps: Vec<String> =
            w.steps.iter().map(|s| format!("({}, {}, {}, {}, m={})", s.a, s.b, s.c, s.d, s.m)).collect();
        out.push_str(&format!("{}: {} -> {} [{:?}] {}\n", w.id, w.source, w.target, w.provenance, steps.join(" then ")));
    }
    out.trim_end().to_string()
}

fn template_table() -> String {
    catalog::templates()
        .iter()
        .map(|t| {
            let params: Vec<&str> = t.params.iter().map(|p| p.name.as_str()).collect();
            format!("{} ({}) [{}]", t.id, t.algebra, params.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn normal_step(alg: &QAlgebra, label: &str, r: &QRMatrix) -> Result<Vec<Check>> {
    let out = fermionic_normal_step(alg, r)?;
    let mut c = Check::new("normal-step", format!("swap and r_WW normalization of {label}"));
    c.detail(format!("swap applied: {}", out.swapped));
    for p in &out.steps {
        c.detail(format!(
            "pullback by (a, b, c, d, m) = ({}, {}, {}, {}, {})",
            format_rational(&p.a),
            format_rational(&p.b),
            format_rational(&p.c),
            format_rational(&p.d),
            p.m
        ));
    }
    if let NormalStatus::UpToSquareFactor { entries } = &out.status {
        c.detail(format!("normalizable up to square factor: {}", entries.join(", ")));
    }
    let blocks = block_split(alg, &out.r)?;
    for (name, m) in [("r_B", &blocks.r_b), ("r_F", &blocks.r_f)] {
        for row in m.to_rows() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            c.detail(format!("{name}: [{}]", cells.join(", ")));
        }
    }
    c.require(coboundary_delta(alg, &out.r).is_ok(), "transformed r is malformed");
    Ok(vec![c])
}

fn export(kind: ExportKind, id: Option<&str>, params: &[String]) -> Result<String> {
    match kind {
        ExportKind::Algebra => {
            let alg = load_algebra(id.ok_or_else(|| anyhow!("algebra name required"))?)?;
            Ok(AlgebraFile::from_algebra(&alg).to_json())
        }
        ExportKind::R => {
            let t = catalog::r_template(id.ok_or_else(|| anyhow!("template id required"))?)?;
            let alg = catalog::algebra(&t.algebra)?;
            let r = t.instantiate(&parse_params(params)?)?;
            Ok(RMatrixFile::from_rmatrix(&alg, &r).to_json())
        }
        ExportKind::Witnesses => Ok(serde_json::to_string_pretty(catalog::witness_list())?),
    }
}
