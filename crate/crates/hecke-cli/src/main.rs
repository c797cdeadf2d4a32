use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_kl::cache::KlCache;
use hecke_kl::cells::{cell_report, schutzenberger_l, schutzenberger_r};
use hecke_kl::hecke::{kl_table, std_mul, to_kl, Basis};
use hecke_kl::shapes::rouquier_shape;
use hecke_kl::twist::{gamma, quasi_idempotent, young_idempotent, TableauPath};
use hecke_kl::verify::{run_all, Level, VerifyConfig};
use hecke_kl::{Error, Hecke, Permutation};

const DEFAULT_MAX_RANK: usize = 7;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Kazhdan-Lusztig computations for the symmetric groups")]
struct Cli {
    /// Print JSON where a plain text form also exists.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached KL tables.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Allow ranks above the default maximum.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// KL polynomial h_{y,w}, or the whole table with --table.
    KlPoly {
        #[arg(short)]
        n: usize,
        #[arg(long, value_name = "PERM")]
        y: Option<String>,
        #[arg(long, value_name = "PERM")]
        w: Option<String>,
        #[arg(long)]
        table: bool,
    },
    /// Two-sided cells with their left cells and distinguished involutions.
    Cells {
        #[arg(short)]
        n: usize,
    },
    /// Schutzenberger images of w.
    Schutz {
        #[arg(short)]
        n: usize,
        #[arg(long, value_name = "PERM")]
        w: String,
    },
    /// Half or full twist in the KL basis.
    TwistExpand {
        #[arg(short)]
        n: usize,
        which: Twist,
    },
    /// Quasi-idempotent k_T, scalar gamma_T and idempotent p_T of a tableau given as a shape path.
    Idempotent {
        #[arg(short)]
        n: usize,
        /// Shapes separated by ';', parts by ',', e.g. "1;1,1".
        #[arg(long)]
        path: String,
    },
    /// Shape of the minimal Rouquier complex of w.
    ComplexShape {
        #[arg(short)]
        n: usize,
        #[arg(long, value_name = "PERM")]
        w: String,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "fast")]
        level: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Twist {
    Ht,
    Ft,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPermutation(_)
            | Error::InvalidPartition(_)
            | Error::InvalidTableau(_)
            | Error::RankTooLarge(..)
            | Error::RankMismatch(..)
            | Error::ShapeMismatch(_)
            | Error::DegreeMismatch { .. }
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

// Write errors such as a closed pipe are ignored.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{}", text);
}

fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("JSON serializes"));
}

fn check_rank(cli: &Cli, n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if n > DEFAULT_MAX_RANK && !cli.force {
        return Err(Failure::Usage(format!("rank {} exceeds the maximum {}; pass --force to override", n, DEFAULT_MAX_RANK)));
    }
    Ok(())
}

fn cache(cli: &Cli) -> Option<KlCache> {
    cli.cache_dir.clone().map(KlCache::new).or_else(KlCache::from_env)
}

fn perm(n: usize, s: &str) -> Result<Permutation, Failure> {
    Ok(Permutation::parse(n, s)?)
}

fn kl_poly(cli: &Cli, n: usize, y: &Option<String>, w: &Option<String>, table: bool) -> Outcome {
    check_rank(cli, n)?;
    if table {
        let t = match cache(cli) {
            Some(c) => c.load_or_compute(n)?,
            None => kl_table(n),
        };
        let g = t.group().clone();
        let entries: Vec<Value> =
            t.entries().map(|(y, w, h)| json!({ "y": g.elem(y).name(), "w": g.elem(w).name(), "h": h.to_json() })).collect();
        print_json(&json!({ "n": n, "count": entries.len(), "entries": entries }));
        return Ok(ExitCode::SUCCESS);
    }
    let (Some(y), Some(w)) = (y, w) else {
        return Err(Failure::Usage("kl-poly needs --y and --w, or --table".into()));
    };
    let (y, w) = (perm(n, y)?, perm(n, w)?);
    let h = kl_table(n).h(&y, &w)?;
    if cli.json {
        print_json(&json!({ "n": n, "y": y.name(), "w": w.name(), "h": h.to_json() }));
    } else {
        emit(&h.to_string());
    }
    Ok(ExitCode::SUCCESS)
}

fn twist_expand(cli: &Cli, n: usize, which: Twist) -> Outcome {
    check_rank(cli, n)?;
    let w0 = Hecke::basis_element(&Permutation::longest(n), Basis::Standard);
    let (name, e) = match which {
        Twist::Ht => ("ht", to_kl(&w0)),
        Twist::Ft => ("ft", to_kl(&std_mul(&w0, &w0)?)),
    };
    let terms: Vec<Value> = e.terms().into_iter().map(|(x, c)| json!([x.name(), c.to_json()])).collect();
    print_json(&json!({ "n": n, "twist": name, "basis": "KL", "terms": terms }));
    Ok(ExitCode::SUCCESS)
}

fn idempotent(cli: &Cli, n: usize, path: &str) -> Outcome {
    check_rank(cli, n)?;
    let path = TableauPath::parse(path)?;
    if path.n() != n {
        return Err(Failure::Usage(format!("path {} has {} steps, expected {}", path, path.n(), n)));
    }
    let kt = quasi_idempotent(&path)?;
    let pt = young_idempotent(&path)?;
    print_json(&json!({
        "T": path.tableau().to_string(),
        "path": path.to_json(),
        "gamma": gamma(&path).to_json(),
        "kT": kt.to_json(),
        "pT": pt.to_json(),
    }));
    Ok(ExitCode::SUCCESS)
}

fn verify(cli: &Cli, level: &str, seed: u64) -> Outcome {
    let level: Level = level.parse()?;
    let mut cfg = VerifyConfig::new(level, seed);
    cfg.cache = cli.cache_dir.clone().map(KlCache::new);
    let report = run_all(&cfg);
    if cli.json {
        print_json(&report.to_json());
    } else {
        emit(&format!("level {}, seed {}", level, seed));
        for r in &report.results {
            emit(&r.line());
        }
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::KlPoly { n, y, w, table } => kl_poly(cli, *n, y, w, *table),
        Command::Cells { n } => {
            check_rank(cli, *n)?;
            let cells: Vec<Value> = cell_report(*n)?.iter().map(|c| c.to_json()).collect();
            print_json(&json!({ "n": n, "cells": cells }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Schutz { n, w } => {
            check_rank(cli, *n)?;
            let w = perm(*n, w)?;
            let left = schutzenberger_l(&w)?;
            if cli.json {
                print_json(&json!({ "w": w.name(), "left": left.name(), "right": schutzenberger_r(&w).name() }));
            } else {
                emit(&left.name());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TwistExpand { n, which } => twist_expand(cli, *n, *which),
        Command::Idempotent { n, path } => idempotent(cli, *n, path),
        Command::ComplexShape { n, w } => {
            check_rank(cli, *n)?;
            let w = perm(*n, w)?;
            let shape = rouquier_shape(&w)?;
            let mut out = shape.to_json();
            out["w"] = json!(w.name());
            print_json(&out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { level, seed } => verify(cli, level, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
    }
}
