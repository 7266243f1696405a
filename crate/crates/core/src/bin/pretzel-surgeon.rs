//! Command-line interface to the finite-surgery toolkit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Deserialize;

use pretzel_surgeon::cache::ResultCache;
use pretzel_surgeon::continuation::{
    continuation_to_ideal_point, ContinuationPlan, DEFAULT_SCHEDULE,
};
use pretzel_surgeon::cusp::{candidate_finite_slopes, exceptional_candidates_6thm};
use pretzel_surgeon::dilog;
use pretzel_surgeon::gluing::GluingSystem;
use pretzel_surgeon::group::{
    abelianization, coxeter_g5_with_definition, derivation_search, run_preset, surgered_presentation,
    RelatorStatus, SearchResult, WordBudget, Word, DEFAULT_MAX_LEN, DEFAULT_MAX_STEPS,
};
use pretzel_surgeon::ideal_points::scan_degenerations;
use pretzel_surgeon::norm::{assemble_constraints, finite_slope_verdict, minimal_norm};
use pretzel_surgeon::ohtsuki::cross_ratio_report;
use pretzel_surgeon::pipeline::{classify, detection_evidence, emit_ledger, ClassifyOptions, Conclusion};
use pretzel_surgeon::slope::{BoundarySlopeTable, KnotSpec, Slope};

#[derive(Parser)]
#[command(name = "pretzel-surgeon", version, about = "finite Dehn surgery classification for (-2,p,q) pretzel knots")]
struct Cli {
    /// Optional TOML config file (data paths and search budgets).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full per-knot classification and print the ledger.
    Classify(ClassifyArgs),
    /// Exact minimal norm of a slope over the feasible coefficient vectors.
    NormMin(NormMinArgs),
    /// Norm verdicts for every candidate slope of a knot.
    Verdicts(KnotArg),
    /// Scan all degeneration types of a gluing system for ideal points.
    IdealScan(IdealScanArgs),
    /// Newton continuation into a named ideal point.
    Continue(ContinueArgs),
    /// Total Bloch-Wigner volume of a shape assignment.
    Volume(VolumeArgs),
    /// Roots and cross ratios of the bundled slope-24 polynomial.
    OhtsukiRoots(OhtsukiArgs),
    /// Group-theoretic checks.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(short, long)]
    p: i64,
    #[arg(short, long)]
    q: i64,
    #[arg(long, default_value = "table")]
    format: String,
    /// Treat paper_asserted entries as settled.
    #[arg(long)]
    allow_asserted: bool,
}

#[derive(Args)]
struct KnotArg {
    /// Knot parameters as P,Q
    #[arg(long, value_parser = parse_knot)]
    knot: KnotSpec,
}

#[derive(Args)]
struct NormMinArgs {
    #[arg(long, value_parser = parse_knot)]
    knot: KnotSpec,
    /// Slope as A/B or an integer
    #[arg(long)]
    slope: Slope,
}

#[derive(Args)]
struct IdealScanArgs {
    /// Triangulation file; the bundled (-2,5,5) system when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Bypass the result cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct ContinueArgs {
    #[arg(long)]
    file: Option<PathBuf>,
    /// slope20, slope20-conj, or slope22
    #[arg(long)]
    plan: String,
}

#[derive(Args)]
struct VolumeArgs {
    /// Shapes as re,im pairs separated by ';', e.g. "0.5,0.866;0.5,0.289"
    #[arg(long)]
    shapes: String,
}

#[derive(Args)]
struct OhtsukiArgs {
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Abelianization of the surgered group.
    Ab(GroupAbArgs),
    /// Derivation search for a named identity.
    Derive(GroupDeriveArgs),
    /// Run a quotient substitution script.
    Quotient(GroupQuotientArgs),
}

#[derive(Args)]
struct GroupAbArgs {
    #[arg(long, value_parser = parse_knot)]
    knot: KnotSpec,
    #[arg(long)]
    slope: Slope,
}

#[derive(Args)]
struct GroupDeriveArgs {
    /// c5 or abc2
    #[arg(long)]
    preset: String,
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    max_steps: Option<usize>,
}

#[derive(Args)]
struct GroupQuotientArgs {
    /// even, gm5, or gm3
    #[arg(long)]
    preset: String,
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
}

fn parse_knot(text: &str) -> Result<KnotSpec, String> {
    let (p, q) = text.split_once(',').ok_or("expected P,Q")?;
    let p: i64 = p.trim().parse().map_err(|_| "P is not an integer")?;
    let q: i64 = q.trim().parse().map_err(|_| "Q is not an integer")?;
    KnotSpec::new(p, q).map_err(|e| e.to_string())
}

#[derive(Debug, Default, Deserialize)]
struct Config {
    #[serde(default)]
    data: DataConfig,
    #[serde(default)]
    budgets: BudgetConfig,
}

#[derive(Debug, Default, Deserialize)]
struct DataConfig {
    gluing: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
struct BudgetConfig {
    max_len: Option<usize>,
    max_steps: Option<usize>,
}

impl Default for BudgetConfig {
    fn default() -> Self {
        BudgetConfig { max_len: None, max_steps: None }
    }
}

const EXIT_INVALID: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match load_config(&cli.config) {
        Ok(c) => c,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    match run(cli, config) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, String> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            toml::from_str(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

fn load_system(file: &Option<PathBuf>, config: &Config) -> Result<(GluingSystem, Vec<u8>), String> {
    let path = file.clone().or_else(|| config.data.gluing.clone());
    match path {
        None => {
            let bytes = pretzel_surgeon::data::GLUING_255_JSON.as_bytes().to_vec();
            Ok((pretzel_surgeon::gluing::pretzel_255_system(), bytes))
        }
        Some(p) => {
            let bytes = std::fs::read(&p).map_err(|e| format!("{}: {e}", p.display()))?;
            let text = String::from_utf8_lossy(&bytes);
            let sys = GluingSystem::from_json(&text).map_err(|e| e.to_string())?;
            Ok((sys, bytes))
        }
    }
}

fn run(cli: Cli, config: Config) -> Result<ExitCode, String> {
    match cli.command {
        Command::Classify(args) => {
            let ledger = classify(
                args.p,
                args.q,
                ClassifyOptions { allow_asserted: args.allow_asserted },
            )
            .map_err(|e| e.to_string())?;
            let rendered = emit_ledger(&ledger, &args.format).map_err(|e| e.to_string())?;
            println!("{rendered}");
            Ok(if ledger.conclusion == Conclusion::NoNontrivialFinite {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INCONCLUSIVE)
            })
        }
        Command::NormMin(args) => {
            let detections: Vec<(Slope, i64)> = detection_evidence(args.knot)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|d| (d.slope, d.min_ideal_points))
                .collect();
            let model = assemble_constraints(args.knot, &detections).map_err(|e| e.to_string())?;
            let (value, witness) =
                model.min_norm_over_feasible(args.slope).map_err(|e| e.to_string())?;
            println!(
                "knot {}  slope {}  min-norm {}  witness {:?}",
                args.knot, args.slope, value, witness
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verdicts(args) => {
            let detections_full = detection_evidence(args.knot).map_err(|e| e.to_string())?;
            let detections: Vec<(Slope, i64)> =
                detections_full.iter().map(|d| (d.slope, d.min_ideal_points)).collect();
            let model = assemble_constraints(args.knot, &detections).map_err(|e| e.to_string())?;
            let table = BoundarySlopeTable::for_knot(args.knot);
            let candidates = if args.knot.p() == 5 && args.knot.q() <= 9 {
                candidate_finite_slopes(args.knot, &table, detections.len())
                    .map_err(|e| e.to_string())?
            } else {
                exceptional_candidates_6thm(args.knot).map_err(|e| e.to_string())?
            };
            println!("knot {}  minimal norm {}", args.knot, minimal_norm(args.knot));
            for slope in &candidates.slopes {
                if table.contains(slope) == Some(true) {
                    println!("{slope:>8}  boundary_slope");
                    continue;
                }
                let (value, _) =
                    model.min_norm_over_feasible(*slope).map_err(|e| e.to_string())?;
                let verdict = finite_slope_verdict(&model, *slope, value);
                println!(
                    "{slope:>8}  min-norm {:>4}  bound {:>3}  {}",
                    value,
                    verdict.bound_value,
                    serde_json::to_string(&verdict.status).unwrap().replace('"', "")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::IdealScan(args) => {
            let (sys, bytes) = load_system(&args.file, &config)?;
            let cache = ResultCache::from_env();
            type ScanOutput = Vec<pretzel_surgeon::ideal_points::IdealPointRecord>;
            let (records, from_cache): (ScanOutput, bool) = if args.no_cache {
                (scan_degenerations(&sys), false)
            } else if let Some(hit) = cache.get::<ScanOutput>("ideal-scan", &bytes) {
                (hit, true)
            } else {
                let fresh = scan_degenerations(&sys);
                cache.put("ideal-scan", &bytes, &fresh).map_err(|e| e.to_string())?;
                (fresh, false)
            };
            println!(
                "{} ideal points{}",
                records.len(),
                if from_cache { " (cache hit)" } else { "" }
            );
            for r in &records {
                println!(
                    "{}  d = {:?} (raw sign {:+})  (vM, vL) = ({}, {})  slope {}",
                    r.degeneration.symbols(),
                    r.d,
                    r.raw_sign,
                    r.v_meridian,
                    r.v_longitude,
                    r.slope
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Continue(args) => {
            let (sys, _) = load_system(&args.file, &config)?;
            let plan = ContinuationPlan::by_name(&args.plan)
                .ok_or_else(|| format!("unknown plan {:?}", args.plan))?;
            let result = continuation_to_ideal_point(&sys, &plan, &DEFAULT_SCHEDULE)
                .map_err(|e| e.to_string())?;
            println!("plan {}  detected slope {}", plan.name, result.detected_slope);
            for (tet, (direct, extrap)) in result
                .nondegenerate
                .iter()
                .zip(result.limit_direct.iter().zip(&result.limit_extrapolated))
            {
                println!(
                    "z{} -> {:+.9}{:+.9}i   (extrapolated {:+.9}{:+.9}i)",
                    tet + 1,
                    direct.re,
                    direct.im,
                    extrap.re,
                    extrap.im
                );
            }
            println!(
                "drift {:.3e}   final residual {:.3e}   limit volume {:+.6}",
                result.drift,
                result.final_residual,
                dilog::volume(&result.limit_direct)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Volume(args) => {
            let shapes = parse_shapes(&args.shapes)?;
            println!("{:.9}", dilog::volume(&shapes));
            Ok(ExitCode::SUCCESS)
        }
        Command::OhtsukiRoots(args) => {
            let report = cross_ratio_report(args.tol).map_err(|e| e.to_string())?;
            println!(
                "{} roots (worst residual {:.2e}), {} distinct cross ratios",
                report.roots.len(),
                report.worst_residual,
                report.distinct
            );
            for (root, ratio) in report.roots.iter().zip(&report.cross_ratios) {
                println!(
                    "zeta = {:+.9}{:+.9}i   cross ratio {:+.9}{:+.9}i",
                    root.re, root.im, ratio.re, ratio.im
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Group(group) => run_group(group, &config),
    }
}

fn run_group(command: GroupCommand, config: &Config) -> Result<ExitCode, String> {
    let budgets = (config.budgets.max_len, config.budgets.max_steps);
    match command {
        GroupCommand::Ab(args) => {
            let pres = surgered_presentation(args.knot.p(), args.knot.q(), args.slope)
                .map_err(|e| e.to_string())?;
            let h1 = abelianization(&pres);
            println!(
                "H1 of {} surgery on {}: {}",
                args.slope,
                args.knot,
                h1.describe()
            );
            Ok(ExitCode::SUCCESS)
        }
        GroupCommand::Derive(args) => {
            let pres =
                coxeter_g5_with_definition(args.p, args.q).map_err(|e| e.to_string())?;
            let c = pres.generator_index("C").expect("C generator");
            let a = pres.generator_index("A").expect("A generator");
            let b = pres.generator_index("B").expect("B generator");
            let target = match args.preset.as_str() {
                "c5" => Word::generator(c, 5),
                "abc2" => Word::from_runs([(a, 1), (b, 1), (c, 1), (a, 1), (b, 1), (c, 1)]),
                other => return Err(format!("unknown derive preset {other:?}")),
            };
            let max_len = args.max_len.or(budgets.0).unwrap_or(DEFAULT_MAX_LEN);
            let max_steps = args.max_steps.or(budgets.1).unwrap_or(DEFAULT_MAX_STEPS);
            match derivation_search(&pres, &target, max_len, max_steps) {
                SearchResult::Found(cert) => {
                    println!(
                        "derived {} in {} insertions; certificate replays to the empty word",
                        args.preset,
                        cert.steps.len()
                    );
                    for step in &cert.steps {
                        println!(
                            "  rotate {} insert relator {}{} shift {}",
                            step.position,
                            step.relator,
                            if step.inverted { " (inverse)" } else { "" },
                            step.shift
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                SearchResult::NotFound { expansions } => {
                    println!(
                        "not found within budget ({expansions} expansions); this proves nothing"
                    );
                    Ok(ExitCode::from(EXIT_INCONCLUSIVE))
                }
            }
        }
        GroupCommand::Quotient(args) => {
            let budget = WordBudget {
                max_len: budgets.0.unwrap_or(WordBudget::default().max_len),
                max_steps: budgets.1.unwrap_or(WordBudget::default().max_steps),
            };
            let reports =
                run_preset(&args.preset, args.p, args.q, budget).map_err(|e| e.to_string())?;
            let mut all_abelian = true;
            for (stage, report) in &reports {
                println!("stage {stage}");
                for r in &report.relators {
                    println!(
                        "  relator {}: image length {:>3}  abelian {}  word-level {}",
                        r.relator,
                        r.image_length,
                        if r.abelian_ok { "ok" } else { "FAIL" },
                        match r.word_level {
                            RelatorStatus::Proved => "proved",
                            RelatorStatus::BudgetExhausted => "budget-exhausted",
                        }
                    );
                    all_abelian &= r.abelian_ok;
                }
            }
            Ok(if all_abelian { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INCONCLUSIVE) })
        }
    }
}

fn parse_shapes(text: &str) -> Result<Vec<Complex64>, String> {
    text.split(';')
        .filter(|chunk| !chunk.trim().is_empty())
        .map(|chunk| {
            let (re, im) = chunk
                .split_once(',')
                .ok_or_else(|| format!("expected re,im in {chunk:?}"))?;
            let re: f64 = re.trim().parse().map_err(|_| format!("bad number {re:?}"))?;
            let im: f64 = im.trim().parse().map_err(|_| format!("bad number {im:?}"))?;
            Ok(Complex64::new(re, im))
        })
        .collect()
}
