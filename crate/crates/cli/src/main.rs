use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hullkit::harness::write_csv_to;
use hullkit::{
    generate, monotone_chain, parse_points, quickhull, read_points_file, rs_quickhull, run_bench_with, write_csv,
    write_points, write_points_file, Algorithm, BenchConfig, Distribution, HullError, Point, Stats, RNG_NAME,
};

/// Exit statuses shared by every subcommand.
const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "hullkit", version, about = "Planar convex hulls: generate inputs, compute, verify, benchmark")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded point set.
    Gen(GenArgs),
    /// Compute the convex hull of a point file and print its vertices counter-clockwise.
    Hull(HullArgs),
    /// Check that every algorithm agrees with the reference on a point file.
    Verify(VerifyArgs),
    /// Run timed trials and write a CSV of averaged results.
    Bench(BenchArgs),
}

#[derive(Args)]
struct DistArgs {
    /// square, circle, oncircle, quad, worst or adversarial
    #[arg(long)]
    dist: String,
    /// Hull size for the adversarial distribution
    #[arg(long)]
    h: Option<usize>,
}

impl DistArgs {
    fn distribution(&self) -> Result<Distribution, HullError> {
        Distribution::from_name(&self.dist, self.h)
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    dist: DistArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, env = "HULLKIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HullArgs {
    /// det, rs or reference
    #[arg(long, default_value = "rs")]
    algo: Algorithm,
    /// Point file, or - for standard input
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long, env = "HULLKIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Print operation counters to standard error
    #[arg(long)]
    stats: bool,
    /// Process ray-shooting inputs in stored order instead of shuffling
    #[arg(long)]
    no_shuffle: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Point file, or - for standard input
    input: PathBuf,
    /// Number of randomized runs, with seeds seed, seed+1, ...
    #[arg(long, default_value_t = 10)]
    trials: u64,
    #[arg(long, env = "HULLKIT_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    dist: DistArgs,
    /// Comma-separated input sizes
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Comma-separated algorithms
    #[arg(long, value_delimiter = ',', default_value = "det,rs")]
    algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, env = "HULLKIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Threads generating trial inputs; timing stays serialized
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Shuffle each ray-shooting input (off by default for benchmarks)
    #[arg(long)]
    shuffle_rayshoot: bool,
    /// CSV output file; standard output when omitted
    #[arg(short, long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<HullError> for Failure {
    fn from(e: HullError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Hull(a) => cmd_hull(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn read_input(path: &Path) -> Result<Vec<Point>, Failure> {
    let points = if path.as_os_str() == "-" {
        parse_points(BufReader::new(io::stdin().lock()))?
    } else {
        read_points_file(path)?
    };
    if points.is_empty() {
        return Err(HullError::EmptyInput.into());
    }
    Ok(points)
}

fn write_stdout(points: &[Point]) -> Result<(), Failure> {
    write_points(io::stdout().lock(), points).map_err(|e| Failure::Usage(format!("writing output: {e}")))
}

fn cmd_gen(a: GenArgs) -> Result<(), Failure> {
    let d = a.dist.distribution()?;
    let points = generate(d, a.n, a.seed)?;
    match a.out {
        Some(path) => write_points_file(&path, &points)?,
        None => write_stdout(&points)?,
    }
    Ok(())
}

fn cmd_hull(a: HullArgs) -> Result<(), Failure> {
    let points = read_input(&a.input)?;
    let mut stats = Stats::new();
    let hull = a.algo.run(&points, a.seed, !a.no_shuffle, &mut stats)?;
    write_stdout(hull.vertices())?;
    if a.stats {
        eprintln!("{stats}");
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let points = read_input(&a.input)?;
    let reference = monotone_chain(&points)?;
    reference
        .check(&points)
        .map_err(|e| Failure::Mismatch(format!("reference hull: {e}")))?;

    let det = quickhull(&points, &mut Stats::new())?;
    det.check(&points).map_err(|e| Failure::Mismatch(format!("det: {e}")))?;
    if !det.cyclic_eq(&reference) {
        return Err(Failure::Mismatch("det hull differs from the reference".into()));
    }
    for i in 0..a.trials {
        let seed = a.seed.wrapping_add(i);
        for shuffle in [true, false] {
            let rs = rs_quickhull(&points, seed, shuffle, &mut Stats::new())?;
            let defect = rs.check(&points).err();
            if defect.is_some() || !rs.cyclic_eq(&reference) {
                let why = defect.map_or("hull differs from the reference".to_string(), |d| d.to_string());
                return Err(Failure::Mismatch(format!("rs with seed {seed} (shuffle={shuffle}): {why}")));
            }
        }
    }
    println!(
        "ok: {} points, hull of {} vertices; det, rs ({} seeds from {}) and reference agree",
        points.len(),
        reference.len(),
        a.trials,
        a.seed
    );
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<(), Failure> {
    let d = a.dist.distribution()?;
    let mut cfg = BenchConfig::new(d, a.sizes, a.algos);
    cfg.trials = a.trials;
    cfg.base_seed = a.seed;
    cfg.workers = a.workers;
    cfg.shuffle_rayshoot = a.shuffle_rayshoot;
    eprintln!("bench: {d}, {} trials per cell, base seed {}, rng {RNG_NAME}", cfg.trials, cfg.base_seed);
    let records = run_bench_with(&cfg, |r| {
        eprintln!(
            "  n={} {}: {:.3} ms, {:.1} tests, hull {:.1}",
            r.n, r.algorithm, r.mean_ms, r.mean_orientation_tests, r.mean_hull_size
        );
    })?;
    match a.out {
        Some(path) => write_csv(&records, &path)?,
        None => {
            let mut out = io::stdout().lock();
            write_csv_to(&records, &mut out).map_err(|e| Failure::Usage(format!("writing CSV: {e}")))?;
            out.flush().map_err(|e| Failure::Usage(format!("writing CSV: {e}")))?;
        }
    }
    Ok(())
}
