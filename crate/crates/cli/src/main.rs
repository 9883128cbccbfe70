//! `equiline` — catalog, generators, composition, and exact verification of
//! real equiangular line sets from the command line.
//!
//! Exit codes: `0` success (and, for `verify`, verified); `1` ran fine but
//! the verification verdict is negative; `2` usage, domain, or parse errors;
//! `3` I/O failures.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use equiline::catalog::{self, CatalogEntry};
use equiline::construct::{self, Diagnostic, Family, GeneratorSpec, PlacementPlan};
use equiline::frames::{self, Status, VerificationReport};
use equiline::matrixfile::{self, MatrixFile, Metadata};
use equiline::LineSet;

#[derive(Parser)]
#[command(name = "equiline", version, about = "Exact equiangular line sets: catalog, generators, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect and verify the builtin catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Generate a member of a parametric family
    Generate(GenerateArgs),
    /// Compose building blocks over a placement-plan file
    Compose {
        /// Plan file: { "ambient_n": N, "items": [ { "block": id, "map": [...] } ] }
        #[arg(long)]
        plan: PathBuf,
        /// Write the composed matrix in the exact JSON format
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Verify a matrix file and print the full report
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Bound calculator: Gerzon count bound, Welch coherence bound, frame bound
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Verification summary of every entry
    List {
        #[arg(long)]
        json: bool,
    },
    /// Exact matrix and metadata of one entry
    Show {
        id: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify all entries; nonzero exit iff a corrected variant fails
    VerifyAll {
        #[arg(long)]
        json: bool,
    },
    /// Write one entry in the exact JSON matrix format
    Export {
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Variant::Best)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// simplex | one-third | one-fifth-a | one-fifth-b | three-n-plus-one |
    /// two-angle | circ-sa-n | circ-sa-2n | circ-shift
    family: String,
    /// Size parameter of the family
    #[arg(long)]
    n: usize,
    /// Write the matrix here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Exact)]
    format: Format,
    /// Print the verification report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Exact JSON matrix format (lossless)
    Exact,
    /// Row-major CSV of doubles (non-authoritative)
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Corrected when present, as printed otherwise
    Best,
    AsPrinted,
    Corrected,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(..) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Catalog { action } => match action {
            CatalogCmd::List { json } => catalog_list(json),
            CatalogCmd::Show { id, json } => catalog_show(&id, json),
            CatalogCmd::VerifyAll { json } => catalog_verify_all(json),
            CatalogCmd::Export {
                id,
                out,
                variant,
                format,
            } => catalog_export(&id, out.as_deref(), variant, format),
        },
        Command::Generate(args) => generate(args),
        Command::Compose { plan, out, json } => compose(&plan, out.as_deref(), json),
        Command::Verify { file, json } => verify(&file, json),
        Command::Bounds { n, m, json } => bounds(n, m, json),
    }
}

fn write_or_stdout(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, contents).map_err(|e| CliError::Io(p.to_path_buf(), e)),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| match e.kind() {
        // a missing input is a usage problem, not an I/O failure of ours
        std::io::ErrorKind::NotFound => CliError::Usage(format!("{}: not found", path.display())),
        _ => CliError::Io(path.to_path_buf(), e),
    })
}

fn report_text(report: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "status:         {}", status_name(report.status));
    if let Some(c) = &report.common_angle {
        let _ = writeln!(s, "common angle:   {c}");
    }
    if !report.angle_spectrum.is_empty() {
        let parts: Vec<String> = report
            .angle_spectrum
            .iter()
            .map(|e| format!("{} ×{}", e.value, e.count))
            .collect();
        let _ = writeln!(s, "angle spectrum: {}", parts.join(", "));
    }
    if !report.offending_pairs.is_empty() {
        let parts: Vec<String> = report
            .offending_pairs
            .iter()
            .take(12)
            .map(|p| format!("({},{}) → {}", p.i, p.j, p.value))
            .collect();
        let more = report.offending_pairs.len().saturating_sub(12);
        let suffix = if more > 0 { format!(" … +{more}") } else { String::new() };
        let _ = writeln!(s, "offending:      {}{suffix}", parts.join(", "));
    }
    let _ = writeln!(
        s,
        "tight:          {}",
        match (&report.is_tight, &report.frame_bound) {
            (true, Some(b)) => format!("yes (frame bound {b})"),
            _ => "no".to_string(),
        }
    );
    let _ = writeln!(s, "welch equality: {}", report.welch_equality);
    let _ = writeln!(s, "gerzon slack:   {}", report.gerzon_slack);
    let _ = writeln!(
        s,
        "neumann:        {}",
        match report.neumann_status {
            frames::NeumannStatus::NotApplicable => "not-applicable",
            frames::NeumannStatus::Pass => "pass",
            frames::NeumannStatus::Violation => "violation",
        }
    );
    let _ = writeln!(
        s,
        "size:           {}×{} (rank {})",
        report.m, report.n, report.rank
    );
    s
}

fn status_name(status: Status) -> &'static str {
    match status {
        Status::Equiangular => "equiangular",
        Status::NotUnitNorm => "not-unit-norm",
        Status::ParallelLines => "parallel-lines",
        Status::MultipleAngles => "multiple-angles",
    }
}

fn matrix_text(ls: &LineSet) -> String {
    let cells: Vec<Vec<String>> = ls
        .rows()
        .map(|row| row.iter().map(|e| e.to_string()).collect())
        .collect();
    let widths: Vec<usize> = (0..ls.n())
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "[ {} ]", line.join("  "));
    }
    out
}

fn catalog_list(json: bool) -> Result<ExitCode, CliError> {
    let rows = catalog::list();
    if json {
        println!("{}", serde_json::to_string(&rows).expect("serializable"));
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "{:<10} {:>3}×{:<3} {:<14} {:<15} {:<15} {}",
        "id", "m", "n", "claimed angle", "as printed", "corrected", "claim"
    );
    for r in rows {
        let id = match r.alias_of {
            Some(target) => format!("{} → {}", r.id, target),
            None => r.id.to_string(),
        };
        println!(
            "{:<10} {:>3}×{:<3} {:<14} {:<15} {:<15} {}",
            id,
            r.claimed_m,
            r.claimed_n,
            r.claimed_angle,
            status_name(r.as_printed_status),
            r.corrected_status.map(status_name).unwrap_or("—"),
            if r.claim_ok { "ok" } else { "MISMATCH" },
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn entry_or_usage(id: &str) -> Result<&'static CatalogEntry, CliError> {
    catalog::get(id).map_err(|e| CliError::Usage(e.to_string()))
}

fn catalog_show(id: &str, json: bool) -> Result<ExitCode, CliError> {
    let entry = entry_or_usage(id)?;
    let as_printed = frames::verify_equiangular(&entry.as_printed);
    let corrected = entry.corrected.as_ref().map(frames::verify_equiangular);
    if json {
        let doc = serde_json::json!({
            "id": entry.id,
            "title": entry.title,
            "claimed_m": entry.claimed_m,
            "claimed_n": entry.claimed_n,
            "claim": entry.claim,
            "notes": entry.notes,
            "as_printed": MatrixFile::from_line_set(&entry.as_printed, None)
                .map_err(|e| CliError::Usage(e.to_string()))?,
            "corrected": entry.corrected.as_ref()
                .map(|ls| MatrixFile::from_line_set(ls, None))
                .transpose()
                .map_err(|e| CliError::Usage(e.to_string()))?,
            "report_as_printed": as_printed,
            "report_corrected": corrected,
        });
        println!("{doc}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("{} — {}", entry.id, entry.title);
    println!(
        "claimed: {}×{} at {}",
        entry.claimed_m,
        entry.claimed_n,
        match &entry.claim {
            catalog::Claim::Equiangular { angle } => angle.to_string(),
            catalog::Claim::MultiAngle { angles } => format!(
                "{{{}}}",
                angles.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
            ),
            catalog::Claim::Unitary => "orthonormal rows".to_string(),
        }
    );
    if !entry.notes.is_empty() {
        println!("notes: {}", entry.notes);
    }
    println!("\nas printed:\n{}", matrix_text(&entry.as_printed));
    println!("{}", report_text(&as_printed));
    if let (Some(ls), Some(rep)) = (&entry.corrected, &corrected) {
        println!("corrected:\n{}", matrix_text(ls));
        println!("{}", report_text(rep));
    }
    Ok(ExitCode::SUCCESS)
}

fn catalog_verify_all(json: bool) -> Result<ExitCode, CliError> {
    let reports = catalog::verify_all();
    let mut corrected_failures = 0usize;
    for r in &reports {
        if r.corrected_ok == Some(false) {
            corrected_failures += 1;
        }
    }
    if json {
        println!("{}", serde_json::to_string(&reports).expect("serializable"));
    } else {
        for r in &reports {
            println!(
                "{:<10} as-printed: {:<15} corrected: {:<15} claim: {}",
                r.id,
                status_name(r.as_printed.status),
                r.corrected
                    .as_ref()
                    .map(|c| status_name(c.status))
                    .unwrap_or("—"),
                if r.claim_ok { "ok" } else { "MISMATCH" },
            );
        }
        println!(
            "{} entries; {} corrected variants failing",
            reports.len(),
            corrected_failures
        );
    }
    Ok(if corrected_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn catalog_export(
    id: &str,
    out: Option<&Path>,
    variant: Variant,
    format: Format,
) -> Result<ExitCode, CliError> {
    let entry = entry_or_usage(id)?;
    let ls = match variant {
        Variant::Best => entry.best(),
        Variant::AsPrinted => &entry.as_printed,
        Variant::Corrected => entry.corrected.as_ref().ok_or_else(|| {
            CliError::Usage(format!("{id}: no corrected variant exists"))
        })?,
    };
    let contents = match format {
        Format::Exact => MatrixFile::from_line_set(
            ls,
            Some(Metadata {
                id: Some(entry.id.to_string()),
                notes: None,
            }),
        )
        .map_err(|e| CliError::Usage(e.to_string()))?
        .to_json(),
        Format::Float => matrixfile::to_float_csv(ls),
    };
    write_or_stdout(out, contents.trim_end())?;
    Ok(ExitCode::SUCCESS)
}

fn generate(args: GenerateArgs) -> Result<ExitCode, CliError> {
    let family: Family = args
        .family
        .parse()
        .map_err(|e: construct::ConstructError| CliError::Usage(e.to_string()))?;
    let spec = GeneratorSpec {
        family,
        n: args.n,
    };
    let ls = spec
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let contents = match args.format {
        Format::Exact => MatrixFile::from_line_set(
            &ls,
            Some(Metadata {
                id: Some(format!("{}-{}", family.name(), args.n)),
                notes: None,
            }),
        )
        .map_err(|e| CliError::Usage(e.to_string()))?
        .to_json(),
        Format::Float => matrixfile::to_float_csv(&ls),
    };
    let report = frames::verify_equiangular(&ls);
    let report_str = if args.json {
        serde_json::to_string(&report).expect("serializable")
    } else {
        report_text(&report)
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, &contents).map_err(|e| CliError::Io(path.clone(), e))?;
            println!("{report_str}");
        }
        None => {
            println!("{contents}");
            eprintln!("{report_str}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn compose(plan_path: &Path, out: Option<&Path>, json: bool) -> Result<ExitCode, CliError> {
    let text = read_file(plan_path)?;
    let plan: PlacementPlan = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", plan_path.display())))?;
    let diagnostics = construct::validate_plan(&plan);
    let ls = construct::apply_plan(&plan, |b| catalog::resolve_block(b))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = frames::verify_equiangular(&ls);
    if let Some(path) = out {
        let file = MatrixFile::from_line_set(&ls, None)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        std::fs::write(path, file.to_json()).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    }
    if json {
        let doc = serde_json::json!({
            "diagnostics": diagnostics,
            "report": report,
        });
        println!("{doc}");
    } else {
        let overlaps = diagnostics
            .iter()
            .filter(|d| matches!(d, Diagnostic::SharedCoordinates { .. }))
            .count();
        println!(
            "plan: {} items over R^{}, {} item-pair overlaps checked",
            plan.items.len(),
            plan.ambient_n,
            overlaps
        );
        println!("{}", report_text(&report));
    }
    // composing a non-equiangular plan is a legitimate experiment
    Ok(ExitCode::SUCCESS)
}

fn verify(file: &Path, json: bool) -> Result<ExitCode, CliError> {
    let text = read_file(file)?;
    let ls = matrixfile::parse_line_set(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let report = frames::verify_equiangular(&ls);
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("{}", report_text(&report));
    }
    Ok(if report.status == Status::Equiangular {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn bounds(n: u64, m: Option<u64>, json: bool) -> Result<ExitCode, CliError> {
    if n < 1 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let gerzon = frames::gerzon_bound(n);
    let welch = m
        .map(|m| {
            frames::welch_bound_sq(m as usize, n as usize)
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .transpose()?;
    if json {
        let doc = serde_json::json!({
            "n": n,
            "m": m,
            "gerzon_bound": gerzon,
            "welch_bound_sq": welch.as_ref().map(|w| {
                serde_json::json!({
                    "num": w.numer().to_string().parse::<i64>().unwrap_or_default(),
                    "den": w.denom().to_string().parse::<i64>().unwrap_or_default(),
                })
            }),
            "frame_bound": m.map(|m| {
                equiline::Rational::new((m as i64).into(), (n as i64).into()).to_string()
            }),
        });
        println!("{doc}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("gerzon bound: at most {gerzon} equiangular lines in R^{n}");
    if let (Some(m), Some(w)) = (m, welch) {
        let bound = equiline::Rational::new((m as i64).into(), (n as i64).into());
        println!("welch bound²: {w}  (max coherence of {m} unit vectors in R^{n} is ≥ √({w}))");
        println!("tight frame bound: {bound}");
    }
    Ok(ExitCode::SUCCESS)
}
