use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbit_covers::corpus::{parse_corpus, parse_cover_arg, run_corpus, BUNDLED_CORPUS};
use orbit_covers::report::{render_text, report_to_json, AnalysisEnvelope, FiberLine};
use orbit_covers::{
    build, codim2_degenerations, cover_fiber_over_codim2, fundamental_group, scan, Algebra, Error,
    ExplicitStep, OrbitId, Partition, Strategy, VeryEvenLabel,
};

/// Covers of nilpotent orbit closures in classical Lie algebras: fundamental
/// groups, codimension-2 singularities, and explicit terminalizations.
#[derive(Parser)]
#[command(name = "orbit-covers", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Canonical,
    Explicit,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one orbit: fundamental group, conditions, codimension-2 loci
    /// and a terminalization of the chosen cover.
    Analyze {
        /// Ambient family: sl, sp or so (the size is the partition sum).
        #[arg(long)]
        algebra: String,
        /// Jordan type, e.g. "6^2,4^2" or "6,6,4,4".
        #[arg(long)]
        partition: String,
        /// universal | cyclic:<e> | ycover
        #[arg(long, default_value = "universal")]
        cover: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Canonical)]
        strategy: StrategyArg,
        /// JSON file with the pivot sequence for --strategy explicit:
        /// [{"kind": "type_i", "pivot": 4}, ...]
        #[arg(long)]
        steps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Label for a very even so-partition (defaults to plus).
        #[arg(long, value_enum)]
        label: Option<LabelArg>,
    },
    /// Run a corpus of expected-report cases (bundled corpus by default).
    VerifyCorpus { path: Option<PathBuf> },
    /// Exhaustively check the library invariants on all orbits up to a size.
    Scan {
        #[arg(long, default_value_t = 12)]
        max_size: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            algebra,
            partition,
            cover,
            strategy,
            steps,
            format,
            label,
        } => run_analyze(&algebra, &partition, &cover, strategy, steps, format, label),
        Command::VerifyCorpus { path } => run_verify_corpus(path),
        Command::Scan { max_size } => run_scan(max_size),
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::StrategyStuck { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn run_analyze(
    algebra: &str,
    partition: &str,
    cover: &str,
    strategy: StrategyArg,
    steps: Option<PathBuf>,
    format: Format,
    label: Option<LabelArg>,
) -> ExitCode {
    match analyze(algebra, partition, cover, strategy, steps, format, label) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::StrategyStuck { partial_pivots, .. } = &e {
                eprintln!("partial chain pivots: {partial_pivots:?}");
            }
            exit_code_for(&e)
        }
    }
}

fn analyze(
    algebra: &str,
    partition: &str,
    cover: &str,
    strategy: StrategyArg,
    steps: Option<PathBuf>,
    format: Format,
    label: Option<LabelArg>,
) -> Result<(), Error> {
    let algebra: Algebra = algebra.parse()?;
    let p = Partition::parse_text(partition)?;
    let mut orbit = OrbitId::new(algebra, p);
    orbit.ensure_valid()?;
    if let Some(l) = label {
        orbit = orbit.with_label(match l {
            LabelArg::Plus => VeryEvenLabel::Plus,
            LabelArg::Minus => VeryEvenLabel::Minus,
        })?;
    }
    let cover = parse_cover_arg(&orbit, cover)?;

    let strategy = match strategy {
        StrategyArg::Canonical => Strategy::Canonical,
        StrategyArg::Explicit => {
            let path = steps.ok_or_else(|| {
                Error::InvalidPivot("--strategy explicit needs --steps <file>".into())
            })?;
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Error::InvalidPivot(format!("cannot read {}: {e}", path.display()))
            })?;
            let list: Vec<ExplicitStep> = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidPivot(format!("bad steps file: {e}")))?;
            Strategy::Explicit(list)
        }
    };

    let report = build(&orbit, &cover, &strategy)?;
    let group = fundamental_group(&orbit)?;
    let conds = orbit.conditions();
    let loci = codim2_degenerations(&orbit).ok();
    let loci_with_fibers: Option<Vec<_>> = loci.as_ref().map(|ls| {
        ls.iter()
            .map(|l| {
                let fiber = cover_fiber_over_codim2(&orbit, &cover, l).ok();
                (l.clone(), fiber)
            })
            .collect()
    });

    match format {
        Format::Text => {
            print!(
                "{}",
                render_text(&report, &group, &conds, loci_with_fibers.as_deref())
            );
        }
        Format::Json => {
            let envelope = AnalysisEnvelope {
                report: report_to_json(&report),
                fundamental_group: group,
                centralizer: orbit_covers::topology::centralizer_note(&orbit),
                conditions: conds,
                codim2_loci: loci,
                cover_fibers: loci_with_fibers.map(|ls| {
                    ls.into_iter()
                        .filter_map(|(l, f)| {
                            f.map(|f| FiberLine {
                                gap: l.gap_member,
                                copies: f.copies,
                                local_model: f.local_model.text(),
                            })
                        })
                        .collect()
                }),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&envelope).expect("envelope serializes")
            );
        }
    }
    Ok(())
}

fn run_verify_corpus(path: Option<PathBuf>) -> ExitCode {
    let text = match &path {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read corpus {}: {e}", p.display());
                return ExitCode::from(2);
            }
        },
        None => BUNDLED_CORPUS.to_string(),
    };
    let cases = match parse_corpus(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cases.is_empty() {
        println!("warning: empty corpus, 0 cases checked");
        return ExitCode::SUCCESS;
    }
    let outcomes = run_corpus(&cases);
    let mut failed = 0usize;
    for o in &outcomes {
        if o.passed {
            println!("PASS {}", o.name);
        } else {
            failed += 1;
            println!("FAIL {}", o.name);
            for d in &o.diffs {
                println!("     {d}");
            }
        }
    }
    println!("{} passed, {} failed", outcomes.len() - failed, failed);
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn run_scan(max_size: u64) -> ExitCode {
    if max_size > 14 {
        eprintln!("error: scan is bounded at size 14");
        return ExitCode::from(2);
    }
    let results = scan::run_scan(max_size);
    let mut bad = 0usize;
    for r in &results {
        let status = if r.passed() { "ok" } else { "FAIL" };
        println!("{status:4} {:45} {:>8} checks, {} violations", r.name, r.checked, r.violations.len());
        for note in &r.notes {
            println!("       note: {note}");
        }
        for v in r.violations.iter().take(10) {
            println!("       violation: {v}");
        }
        if !r.passed() {
            bad += 1;
        }
    }
    if bad > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
