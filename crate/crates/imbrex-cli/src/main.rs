//! Command-line front end: construct catalog geometries, run axiom
//! suites, compute residues and spreads, and diff run manifests.
//!
//! Exit codes: 0 = all checks passed, 1 = a check failed (witness in the
//! report), 2 = usage or structural error.

use clap::{Parser, Subcommand};
use imbrex::analysis::{
    block_geometry, check_cc1, double_perp_geometry, induced_spread, verify_nonclosing_theorem,
};
use imbrex::axioms::{check_imb_star, check_polar_space, check_strong_parapolar_diam2, is_imbrex};
use imbrex::catalog::{self, Params};
use imbrex::json::{
    fnv64, parse_input, strip_timing, EmbeddedFile, FileError, GeometryFile, InputFile,
    RunManifest, SpreadFile,
};
use imbrex::report::{all_passed, AxiomReport};
use imbrex::scan::ScanPolicy;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "imbrex",
    version,
    about = "finite incidence geometry constructor and axiom checker"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog geometry and write canonical JSON
    Construct {
        /// catalog entry, e.g. grassmann, segre, h4, imbrex-h4
        name: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        /// emit the coordinatized set (segre, grassmann, halfspin_d5)
        #[arg(long)]
        embedded: bool,
        /// output path; stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// bypass the construction cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Run an axiom suite against a geometry or embedded file
    Check {
        input: PathBuf,
        /// polar | parapolar | imbrex | imbstar | onan | cc1 | mm | lmm3 | all
        #[arg(long)]
        suite: String,
        /// sample size for large geometries
        #[arg(long)]
        sample: Option<u64>,
        /// seed for sampled scans
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// force exhaustive scans regardless of size
        #[arg(long)]
        full: bool,
        /// write the manifest here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Residue of an embedded set at a point
    Residue {
        input: PathBuf,
        #[arg(long)]
        point: u32,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Induced spread of a symp by a disjoint block, or its double-perp dump
    Spread {
        input: PathBuf,
        #[arg(long)]
        block: Option<u32>,
        #[arg(long)]
        symp: Option<u32>,
        /// dump the double-perp geometry instead (lines as line-id sets)
        #[arg(long)]
        sigma: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare two run manifests, ignoring timing fields
    ReportDiff { a: PathBuf, b: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[derive(Debug)]
enum CliError {
    Catalog(catalog::CatalogError),
    File(FileError),
    Io(std::io::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Catalog(e) => write!(f, "{e}"),
            CliError::File(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(s) => write!(f, "{s}"),
        }
    }
}

impl From<catalog::CatalogError> for CliError {
    fn from(e: catalog::CatalogError) -> Self {
        CliError::Catalog(e)
    }
}
impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::File(e)
    }
}
impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Construct {
            name,
            m,
            n,
            p,
            r,
            q,
            embedded,
            out,
            no_cache,
        } => cmd_construct(&name, Params { m, n, p, r, q }, embedded, out, no_cache),
        Command::Check {
            input,
            suite,
            sample,
            seed,
            full,
            report,
        } => cmd_check(&input, &suite, sample, seed, full, report),
        Command::Residue { input, point, out } => cmd_residue(&input, point, out),
        Command::Spread {
            input,
            block,
            symp,
            sigma,
            out,
        } => cmd_spread(&input, block, symp, sigma, out),
        Command::ReportDiff { a, b } => cmd_report_diff(&a, &b),
    }
}

fn cache_dir() -> PathBuf {
    match std::env::var_os("IMBREX_CACHE_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => std::env::temp_dir().join("imbrex-cache"),
    }
}

fn cache_key(name: &str, params: &Params, embedded: bool) -> String {
    let tag = format!(
        "{name}|m={:?}|n={:?}|p={:?}|r={:?}|q={:?}|embedded={embedded}",
        params.m, params.n, params.p, params.r, params.q
    );
    format!("{:016x}.json", fnv64(tag.as_bytes()))
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_construct(
    name: &str,
    params: Params,
    embedded: bool,
    out: Option<PathBuf>,
    no_cache: bool,
) -> Result<ExitCode, CliError> {
    let cache_path = cache_dir().join(cache_key(name, &params, embedded));
    if !no_cache {
        if let Ok(text) = std::fs::read_to_string(&cache_path) {
            if parse_input(&text).is_ok() {
                eprintln!("cache hit: {}", cache_path.display());
                write_output(&out, &text)?;
                return Ok(ExitCode::SUCCESS);
            }
        }
    }
    let text = if embedded {
        let e = catalog::build_embedded_mm(name, &params)?;
        eprintln!(
            "built {name}: {} points, {} family members, ambient PG({}, {}), (d,r) = ({},{})",
            e.point_count(),
            e.xi_count(),
            e.ambient,
            e.field.order(),
            e.d,
            e.r
        );
        EmbeddedFile::of(&e).to_canonical_string()
    } else {
        let g = catalog::build(name, &params)?;
        eprintln!(
            "built {}: {} points, {} lines",
            g.name(),
            g.point_count(),
            g.line_count()
        );
        GeometryFile::of(&g).to_canonical_string()
    };
    if !no_cache && std::fs::create_dir_all(cache_dir()).is_ok() {
        let _ = std::fs::write(&cache_path, &text);
    }
    write_output(&out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn policy_from(sample: Option<u64>, seed: u64, full: bool) -> ScanPolicy {
    let mut policy = ScanPolicy::default();
    if let Some(s) = sample {
        policy.samples = s;
    }
    policy.seed = seed;
    if full {
        policy.exhaustive_threshold = usize::MAX;
    }
    policy
}

const SUITES: &[&str] = &[
    "polar",
    "parapolar",
    "imbrex",
    "imbstar",
    "onan",
    "cc1",
    "mm",
    "lmm3",
    "all",
];

fn cmd_check(
    input: &Path,
    suite: &str,
    sample: Option<u64>,
    seed: u64,
    full: bool,
    report_path: Option<PathBuf>,
) -> Result<ExitCode, CliError> {
    if !SUITES.contains(&suite) {
        return Err(CliError::Usage(format!(
            "unknown suite {suite:?}; supported: {}",
            SUITES.join(", ")
        )));
    }
    let start = Instant::now();
    let text = std::fs::read_to_string(input)?;
    let parsed = parse_input(&text)?;
    let policy = policy_from(sample, seed, full);
    let reports = match (&parsed, suite) {
        (InputFile::Geometry(f), "polar") => {
            let g = f.clone().into_geometry()?;
            check_polar_space(&g, None).reports
        }
        (InputFile::Geometry(f), "parapolar") => {
            let g = f.clone().into_geometry()?;
            check_strong_parapolar_diam2(&g, &policy).reports
        }
        (InputFile::Geometry(f), "imbrex") => {
            let g = f.clone().into_geometry()?;
            is_imbrex(&g, &policy).reports
        }
        (InputFile::Geometry(f), "imbstar") => {
            let g = f.clone().into_geometry()?;
            let para = check_strong_parapolar_diam2(&g, &policy);
            let mut reports = para.reports;
            if let (Some(symps), true) = (&para.symps, all_passed(&reports)) {
                reports.push(check_imb_star(&g, symps, &policy));
            }
            reports
        }
        (InputFile::Geometry(f), "onan") => {
            let g = f.clone().into_geometry()?;
            let verdict = is_imbrex(&g, &policy);
            if !verdict.passed() {
                return Err(CliError::Usage(
                    "the nonclosing theorem requires an imbrex geometry".into(),
                ));
            }
            let symps = verdict.symps.as_ref().expect("imbrex pass has symps");
            let (bg, mut reports) =
                block_geometry(&g, symps).map_err(|e| CliError::Usage(e.to_string()))?;
            reports.push(
                verify_nonclosing_theorem(&g, &bg, symps)
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            );
            reports
        }
        (InputFile::Geometry(f), "cc1") => {
            let g = f.clone().into_geometry()?;
            let para = check_strong_parapolar_diam2(&g, &policy);
            if !para.passed() {
                return Err(CliError::Usage(
                    "CC1 requires a strong parapolar space of diameter 2".into(),
                ));
            }
            let symps = para.symps.as_ref().expect("pass has symps");
            vec![check_cc1(&g, symps, &policy).map_err(|e| CliError::Usage(e.to_string()))?]
        }
        (InputFile::Geometry(f), "all") => {
            let g = f.clone().into_geometry()?;
            let verdict = is_imbrex(&g, &policy);
            let mut reports = verdict.reports;
            if let (Some(symps), true) = (&verdict.symps, all_passed(&reports)) {
                reports.push(check_imb_star(&g, symps, &policy));
                match verdict.profile.as_ref().and_then(|p| p.symplectic_rank) {
                    Some(2) => {
                        if let Ok((bg, more)) = block_geometry(&g, symps) {
                            reports.extend(more);
                            if let Ok(r) = verify_nonclosing_theorem(&g, &bg, symps) {
                                reports.push(r);
                            }
                        }
                    }
                    Some(r) if r >= 3 => {
                        if let Ok(r) = check_cc1(&g, symps, &policy) {
                            reports.push(r);
                        }
                    }
                    _ => {}
                }
            }
            reports
        }
        (InputFile::Embedded(f), "mm") => {
            let e = f.clone().into_mm_set()?;
            let mut reports = e.validate_structure();
            reports.extend(e.check_mm_axioms());
            reports
        }
        (InputFile::Embedded(f), "lmm3" | "all") => {
            let e = f.clone().into_mm_set()?;
            let mut reports = e.validate_structure();
            reports.extend(e.check_mm_axioms());
            if all_passed(&reports) {
                reports.push(e.check_lmm3(&policy).map_err(FileError::Mm)?.report);
            }
            reports
        }
        (InputFile::Embedded(_), s) => {
            return Err(CliError::Usage(format!(
                "suite {s:?} needs a Geometry JSON input; this file is an embedded set"
            )))
        }
        (InputFile::Geometry(_), s) => {
            return Err(CliError::Usage(format!(
                "suite {s:?} needs an Embedded JSON input; this file is an abstract geometry"
            )))
        }
    };

    let passed = all_passed(&reports);
    emit_manifest(
        input,
        &text,
        suite,
        seed,
        sample,
        full,
        reports,
        start,
        report_path,
    )?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[allow(clippy::too_many_arguments)]
fn emit_manifest(
    input: &Path,
    input_text: &str,
    suite: &str,
    seed: u64,
    sample: Option<u64>,
    full: bool,
    reports: Vec<AxiomReport>,
    start: Instant,
    report_path: Option<PathBuf>,
) -> Result<(), CliError> {
    let mut inputs = std::collections::BTreeMap::new();
    inputs.insert(
        input.display().to_string(),
        format!("{:016x}", fnv64(input_text.as_bytes())),
    );
    let mut command = format!("check {} --suite {suite} --seed {seed}", input.display());
    if let Some(s) = sample {
        command.push_str(&format!(" --sample {s}"));
    }
    if full {
        command.push_str(" --full");
    }
    for r in &reports {
        eprintln!("{}: {}", r.axiom, if r.passed() { "pass" } else { "FAIL" });
    }
    let manifest = RunManifest {
        command,
        inputs,
        seed: Some(seed),
        reports,
        total_ms: start.elapsed().as_millis() as u64,
    };
    let mut text = serde_json::to_string_pretty(&manifest).map_err(FileError::Json)?;
    text.push('\n');
    match report_path {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_residue(input: &Path, point: u32, out: Option<PathBuf>) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(input)?;
    let InputFile::Embedded(f) = parse_input(&text)? else {
        return Err(CliError::Usage(
            "residue needs an Embedded JSON input".into(),
        ));
    };
    let e = f.into_mm_set()?;
    let res = e.residue(point).map_err(FileError::Mm)?;
    for r in res.validate_structure() {
        eprintln!(
            "residue {}: {}",
            r.axiom,
            if r.passed() { "pass" } else { "not satisfied" }
        );
    }
    eprintln!(
        "residue at {point}: {} points, {} family members, ambient PG({}, {}), (d,r) = ({},{})",
        res.point_count(),
        res.xi_count(),
        res.ambient,
        res.field.order(),
        res.d,
        res.r
    );
    write_output(&out, &EmbeddedFile::of(&res).to_canonical_string())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_spread(
    input: &Path,
    block: Option<u32>,
    symp: Option<u32>,
    sigma: bool,
    out: Option<PathBuf>,
) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(input)?;
    let InputFile::Geometry(f) = parse_input(&text)? else {
        return Err(CliError::Usage("spread needs a Geometry JSON input".into()));
    };
    let g = f.into_geometry()?;
    let verdict = is_imbrex(&g, &ScanPolicy::default());
    if !verdict.passed() || verdict.symplectic_rank() != Some(2) {
        return Err(CliError::Usage(
            "spreads need an imbrex geometry of symplectic rank 2".into(),
        ));
    }
    let symps = verdict.symps.as_ref().expect("pass has symps");
    let (bg, _) = block_geometry(&g, symps).map_err(|e| CliError::Usage(e.to_string()))?;
    let (block, symp) = match (block, symp) {
        (Some(b), Some(s)) => (b, s),
        _ => {
            // first disjoint pair in canonical order
            let mut found = None;
            'search: for b in 0..bg.blocks.len() as u32 {
                for s in 0..symps.len() as u32 {
                    if bg.blocks[b as usize].is_disjoint(&symps.symps[s as usize].points) {
                        found = Some((b, s));
                        break 'search;
                    }
                }
            }
            found.ok_or_else(|| CliError::Usage("no disjoint (block, symp) pair".into()))?
        }
    };
    let spread =
        induced_spread(&g, &bg, block, symp, symps).map_err(|e| CliError::Usage(e.to_string()))?;
    let file = if sigma {
        let dp = double_perp_geometry(&g, &bg, symps, &spread)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let lines: Vec<Vec<u32>> = dp
            .sigma
            .lines()
            .iter()
            .map(|l| l.iter().map(|&i| spread.lines[i as usize]).collect())
            .collect();
        SpreadFile { symp, block, lines }
    } else {
        SpreadFile {
            symp,
            block,
            lines: spread
                .lines
                .iter()
                .map(|&li| g.line(li).to_vec())
                .collect(),
        }
    };
    eprintln!(
        "spread of symp {symp} induced by block {block}: {} lines{}",
        file.lines.len(),
        if sigma { " (double-perp dump)" } else { "" }
    );
    write_output(&out, &file.to_canonical_string())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_report_diff(a: &Path, b: &Path) -> Result<ExitCode, CliError> {
    let mut va: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(a)?).map_err(FileError::Json)?;
    let mut vb: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(b)?).map_err(FileError::Json)?;
    strip_timing(&mut va);
    strip_timing(&mut vb);
    if va == vb {
        println!("identical (timing fields ignored)");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("manifests differ");
        Ok(ExitCode::from(1))
    }
}
