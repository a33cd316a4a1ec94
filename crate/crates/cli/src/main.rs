use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use splitlike::classes::classify;
use splitlike::exact::solve_exact;
use splitlike::gadgets::{tdm_to_k14free_chordal, Reduction, Source};
use splitlike::harness::{
    parse_counterexample, replay, run_equivalence_suite, run_solver_fuzz, run_structure_suite,
    write_counterexample, CampaignConfig, Report,
};
use splitlike::io::{
    one_based, parse_cover_json, parse_stp, write_artifact, write_clique_gadget, StpDocument,
};
use splitlike::poly::{
    dispatch_auto, solve_chordal_ksplit, solve_claw_free_bipartite, solve_star_convex_bisplit,
    solve_via_hub, Algorithm, Certificate, PolyResult,
};
use splitlike::{SplitLikePartition, SteinerInstance};

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Steiner trees on split-like graphs: recognition, solvers, reductions and
/// verification campaigns.
#[derive(Parser)]
#[command(name = "splitlike", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class report of a graph as JSON.
    Recognize { file: PathBuf },
    /// Solve a Steiner instance; with a budget, exit 1 when it is exceeded.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Fall back to the exhaustive solver when no specialized one applies.
        #[arg(long)]
        exact: bool,
        /// Accepted for reproducible invocations; every solver is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        /// Print the result as JSON with 0-based ids.
        #[arg(long)]
        json: bool,
    },
    /// Build a reduction gadget from a cover instance; the sidecar is written
    /// next to OUT with a .json extension.
    Reduce {
        #[arg(long, value_enum)]
        from: SourceKind,
        #[arg(long)]
        target: String,
        input: PathBuf,
        output: PathBuf,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per check family.
        #[arg(long)]
        count: Option<usize>,
        /// Directory receiving one file per counterexample.
        #[arg(long)]
        save_counterexamples: Option<PathBuf>,
        /// Keep wall-clock timings in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Re-run a stored counterexample.
    Replay { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Auto,
    Exact,
    Claw,
    Hub,
    ChordalKsplit,
    StarBisplit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceKind {
    X3c3,
    Xlc,
    X3c,
    #[value(name = "3dm")]
    Tdm,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Equivalence,
    Structure,
    Fuzz,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Recognize { file } => recognize(&file),
        Command::Solve {
            file,
            algo,
            exact,
            seed: _,
            json,
        } => solve(&file, algo, exact, json),
        Command::Reduce {
            from,
            target,
            input,
            output,
        } => reduce(from, &target, &input, &output),
        Command::Verify {
            suite,
            seed,
            count,
            save_counterexamples,
            timing,
        } => verify(suite, seed, count, save_counterexamples.as_deref(), timing),
        Command::Replay { file } => replay_file(&file),
    }
    .or_else(|e| match e.downcast_ref::<ExitWith>() {
        Some(ExitWith(code, _)) => {
            eprintln!("{e}");
            Ok(*code)
        }
        None => Err(e),
    })
}

/// Failure carrying its own exit code.
#[derive(Debug)]
struct ExitWith(u8, String);

impl std::fmt::Display for ExitWith {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for ExitWith {}

/// Writes one block to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_stp(path: &Path) -> Result<StpDocument> {
    parse_stp(&read(path)?).with_context(|| format!("cannot parse {}", path.display()))
}

fn recognize(file: &Path) -> Result<u8> {
    let doc = read_stp(file)?;
    let forced = doc.terminals.clone().unwrap_or_default();
    let report = classify(&doc.graph, doc.partition.as_ref(), &forced)?;
    emit(&serde_json::to_string_pretty(&report)?);
    Ok(0)
}

/// Supplied certificate, else one found by recognition.
fn partition_for(
    doc: &StpDocument,
    inst: &SteinerInstance,
    pick: impl Fn(&splitlike::ClassReport) -> Option<SplitLikePartition>,
) -> Result<SplitLikePartition> {
    if let Some(p) = &doc.partition {
        return Ok(p.clone());
    }
    let report = classify(inst.graph(), None, inst.terminals())?;
    pick(&report).context("no suitable partition found; add a Partition section")
}

fn solve(file: &Path, algo: Algo, fallback: bool, json: bool) -> Result<u8> {
    let doc = read_stp(file)?;
    let inst = doc.instance()?;
    let exact = |inst: &SteinerInstance| -> Result<PolyResult> {
        Ok(PolyResult {
            solution: solve_exact(inst)?,
            algorithm: Algorithm::Exact,
            certificate: Certificate::None,
        })
    };
    let result = match algo {
        Algo::Auto => match dispatch_auto(&inst, doc.partition.as_ref())? {
            Some(r) => r,
            None if fallback => exact(&inst)?,
            None => {
                return Err(ExitWith(
                    EXIT_USAGE,
                    "no specialized algorithm applies; rerun with --exact".into(),
                )
                .into())
            }
        },
        Algo::Exact => exact(&inst)?,
        Algo::Claw => solve_claw_free_bipartite(&inst)?,
        Algo::Hub => solve_via_hub(&inst)?.context("graph has no universal vertex")?,
        Algo::ChordalKsplit => {
            let p = partition_for(&doc, &inst, |r| r.trisplit.clone().or(r.bisplit.clone()))?;
            solve_chordal_ksplit(&inst, &p)?
        }
        Algo::StarBisplit => {
            let p = partition_for(&doc, &inst, |r| r.bisplit.clone())?;
            let center = splitlike::classes::star_center_bisplit(inst.graph(), &p)?
                .context("no star center on the biclique")?;
            solve_star_convex_bisplit(&inst, &p, center)?
        }
    };
    let within = inst.budget().map(|k| result.size() <= k);
    let text = if json {
        serde_json::to_string_pretty(&result)?
    } else {
        let tree: Vec<String> = result
            .solution
            .tree_edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        let mut lines = vec![
            format!("algorithm: {}", result.algorithm.name()),
            format!("S = {}", one_based(&result.solution.steiner)),
            format!("size: {}", result.size()),
            format!("tree: {}", tree.join(" ")),
        ];
        if let (Some(k), Some(ok)) = (inst.budget(), within) {
            lines.push(format!("budget {k}: {}", if ok { "yes" } else { "no" }));
        }
        lines.join("\n")
    };
    emit(&text);
    Ok(if within == Some(false) { EXIT_NO } else { 0 })
}

fn reduce(from: SourceKind, target: &str, input: &Path, output: &Path) -> Result<u8> {
    let sidecar = output.with_extension("json");
    if sidecar == output {
        bail!("output must not itself end in .json");
    }
    let source = parse_cover_json(&read(input)?)
        .with_context(|| format!("cannot parse {}", input.display()))?;
    let (stp, json) = match (&source, target) {
        (Source::TripleSystem(t), "path-chordal") if from == SourceKind::Tdm => {
            write_clique_gadget(&tdm_to_k14free_chordal(t)?)
        }
        (Source::ExactCover(c), tag) if from != SourceKind::Tdm => {
            let reduction =
                Reduction::from_tag(tag).with_context(|| format!("unknown target {tag}"))?;
            match from {
                SourceKind::X3c3 if c.set_size != 3 || c.occurrence_cap.is_none_or(|k| k > 3) => {
                    bail!("x3c3 input needs 3-sets with occurrence_cap at most 3")
                }
                SourceKind::X3c if c.set_size != 3 => bail!("x3c input needs 3-sets"),
                _ => {}
            }
            if matches!(reduction, Reduction::K15Bipartite | Reduction::K14Bipartite)
                && from != SourceKind::X3c3
            {
                bail!("target {tag} needs --from x3c3");
            }
            if from == SourceKind::Xlc && reduction != Reduction::Bisplit {
                bail!("--from xlc only supports --target bisplit");
            }
            write_artifact(&reduction.apply(c)?)
        }
        _ => bail!("input kind and --from/--target do not match"),
    };
    fs::write(output, stp).with_context(|| format!("cannot write {}", output.display()))?;
    fs::write(&sidecar, json).with_context(|| format!("cannot write {}", sidecar.display()))?;
    Ok(0)
}

fn verify(
    suite: SuiteArg,
    seed: u64,
    count: Option<usize>,
    save: Option<&Path>,
    timing: bool,
) -> Result<u8> {
    let mut cfg = CampaignConfig {
        seed,
        ..CampaignConfig::default()
    };
    if let Some(n) = count {
        cfg.sources = n;
        cfg.lemma_instances = n;
        cfg.fuzz_instances = n;
    }
    let report = match suite {
        SuiteArg::Equivalence => run_equivalence_suite(&cfg)?,
        SuiteArg::Structure => run_structure_suite(&cfg)?,
        SuiteArg::Fuzz => run_solver_fuzz(&cfg)?,
    };
    if let Some(dir) = save {
        save_counterexamples(&report, dir)?;
    }
    print_report(&report, timing);
    Ok(if report.asserted_ok() { 0 } else { EXIT_VERIFY })
}

fn save_counterexamples(report: &Report, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for cx in &report.counterexamples {
        let name = format!("{}-{}.json", cx.check.replace('/', "_"), cx.index);
        fs::write(dir.join(name), write_counterexample(cx))?;
    }
    Ok(())
}

fn print_report(report: &Report, timing: bool) {
    for line in report.summary_lines() {
        eprintln!("{line}");
    }
    emit(&if timing {
        report.to_json()
    } else {
        report.to_json_without_timing()
    });
}

fn replay_file(file: &Path) -> Result<u8> {
    let cx = parse_counterexample(&read(file)?)
        .with_context(|| format!("cannot parse {}", file.display()))?;
    let report = replay(&cx)?;
    print_report(&report, false);
    let failed = report.checks.values().any(|s| s.failed > 0);
    Ok(if failed { EXIT_VERIFY } else { 0 })
}
