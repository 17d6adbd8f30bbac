mod render;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use knotkh::corpus;
use knotkh::invariants::{certify, check_detection_inequality, check_satellite_bound, jones};
use knotkh::{build_complex, build_satellite, homology, homology_fast, parse_pd, Diagram, PatternSpec, RankTable};
use serde_json::json;

/// Khovanov homology over GF(2) from PD codes.
#[derive(Parser)]
#[command(name = "knotkh", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the homology rank table and its total.
    Kh {
        input: String,
        #[command(flatten)]
        engine: Engine,
        #[arg(long)]
        json: bool,
    },
    /// Print the Jones polynomial (graded Euler characteristic) in q.
    Jones {
        input: String,
        #[command(flatten)]
        engine: Engine,
        #[arg(long)]
        json: bool,
    },
    /// Print the determinant and compare it with the reduced rank.
    Det {
        input: String,
        #[command(flatten)]
        path: PathArgs,
        #[arg(long)]
        json: bool,
    },
    /// Unknot test. Exit 0 = Unknot, 1 = Knotted, 2 = Inconclusive.
    Detect {
        input: String,
        /// Assert that the knot has tangle unknotting number one.
        #[arg(long = "assert-tu1")]
        assert_tu1: bool,
        #[command(flatten)]
        path: PathArgs,
    },
    /// Build the n-twisted satellite of a companion knot.
    Satellite {
        companion: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i32,
        #[arg(long, value_enum, default_value_t = Emit::Pd)]
        emit: Emit,
        #[command(flatten)]
        engine: Engine,
        #[arg(long)]
        json: bool,
    },
    /// Compute every entry of a corpus file and print a CSV report.
    Sweep {
        /// Corpus file; the built-in corpus when omitted.
        file: Option<PathBuf>,
        #[command(flatten)]
        path: PathArgs,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

#[derive(Args, Clone, Copy)]
struct PathArgs {
    /// Scanning algorithm (default).
    #[arg(long, conflicts_with = "naive")]
    fast: bool,
    /// Full cube of resolutions.
    #[arg(long)]
    naive: bool,
}

#[derive(Args, Clone, Copy)]
struct Engine {
    /// Reduced homology (default).
    #[arg(long, conflicts_with = "unreduced")]
    reduced: bool,
    #[arg(long)]
    unreduced: bool,
    #[command(flatten)]
    path: PathArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Pd,
    Kh,
}

pub(crate) fn compute(d: &Diagram, reduced: bool, naive: bool) -> knotkh::Result<RankTable> {
    if naive {
        homology(&build_complex(d, reduced)?)
    } else {
        homology_fast(d, reduced)
    }
}

/// A corpus name (including `U`) or a PD code.
fn resolve(input: &str) -> Result<(String, Diagram)> {
    let input = input.trim();
    if let Some(e) = corpus::lookup(input) {
        return Ok((e.name, e.diagram));
    }
    let d = parse_pd(input).with_context(|| format!("{input:?} is neither a corpus name nor a valid PD code"))?;
    Ok((input.to_string(), d))
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Kh { input, engine, json } => {
            let (_, d) = resolve(&input)?;
            let t = compute(&d, !engine.unreduced, engine.path.naive)?;
            if json {
                println!("{}", t.to_json());
            } else {
                print!("{}", render::table(&t));
            }
        }
        Cmd::Jones { input, engine, json } => {
            let (_, d) = resolve(&input)?;
            let t = compute(&d, !engine.unreduced, engine.path.naive)?;
            let p = jones(&t);
            if json {
                println!("{}", json!({ "reduced": t.is_reduced(), "jones": p }));
            } else {
                println!("{p}");
            }
        }
        Cmd::Det { input, path, json } => {
            let (_, d) = resolve(&input)?;
            let t = compute(&d, true, path.naive)?;
            let r = check_detection_inequality(&t)?;
            if json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                println!("det {}\nrank {}\nslack {}", r.determinant, r.total_rank, r.slack);
            }
        }
        Cmd::Detect { input, assert_tu1, path } => {
            let (name, d) = resolve(&input)?;
            if !d.is_knot() {
                bail!("detect needs a knot, the diagram has {} components", d.component_count());
            }
            let t = compute(&d, true, path.naive)?;
            let c = certify(&name, &t, assert_tu1);
            println!("{}", serde_json::to_string(&c)?);
            return Ok(c.verdict.exit_code() as u8);
        }
        Cmd::Satellite { companion, n, emit, engine, json } => {
            let (_, d) = resolve(&companion)?;
            let s = build_satellite(&d, PatternSpec { n })?;
            match emit {
                Emit::Pd if json => {
                    println!("{}", json!({ "n": n, "crossings": s.crossing_count(), "pd": s.to_string() }));
                }
                Emit::Pd => println!("{s}"),
                Emit::Kh => {
                    let reduced = !engine.unreduced;
                    let t = compute(&s, reduced, engine.path.naive)?;
                    if json {
                        let nontrivial = reduced && compute(&d, true, false)?.total_rank() > 1;
                        let bound = check_satellite_bound(&t, n, nontrivial);
                        println!("{}", json!({ "n": n, "crossings": s.crossing_count(), "table": t, "bound": bound }));
                    } else {
                        print!("{}", render::table(&t));
                    }
                }
            }
        }
        Cmd::Sweep { file, path, threads } => {
            let entries = match &file {
                Some(p) => {
                    let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    corpus::parse_corpus(&text)?
                }
                None => corpus::builtin(),
            };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
            let rows = pool.install(|| sweep::run(&entries, path.naive));
            let failures = sweep::report(&rows, std::io::stdout().lock(), &mut std::io::stderr())?;
            return Ok(u8::from(failures > 0));
        }
    }
    Ok(0)
}

/// Exit code for usage and computation errors, distinct from the verdicts.
const EXIT_ERROR: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
