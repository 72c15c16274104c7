//! Trial runner: for each size and algorithm, generate a fresh point set per
//! trial, time the hull computation alone, and average wall-clock time and
//! operation counts. Counter columns are reproducible; timings are not.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{HullError, Result};
use crate::generators::{generate, Distribution};
use crate::geom::Point;
use crate::quickhull::quickhull;
use crate::reference::monotone_chain_counted;
use crate::rs_quickhull::{rs_quickhull_with, RsOptions};
use crate::{Hull, Stats};

pub const CSV_HEADER: &str =
    "distribution,n,algorithm,trials,mean_ms,stddev_ms,mean_orientation_tests,mean_hull_size,seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Deterministic Quickhull.
    Det,
    /// Randomized ray-shooting Quickhull.
    Rs,
    /// Monotone chain.
    Reference,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Det, Algorithm::Rs, Algorithm::Reference];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Det => "det",
            Algorithm::Rs => "rs",
            Algorithm::Reference => "reference",
        }
    }

    /// Run on `points`. `seed` and `shuffle_rayshoot` only affect [`Algorithm::Rs`].
    pub fn run(self, points: &[Point], seed: u64, shuffle_rayshoot: bool, stats: &mut Stats) -> Result<Hull> {
        match self {
            Algorithm::Det => quickhull(points, stats),
            Algorithm::Rs => rs_quickhull_with(points, RsOptions { seed, shuffle_rayshoot }, stats),
            Algorithm::Reference => monotone_chain_counted(points, stats),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = HullError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "det" => Ok(Algorithm::Det),
            "rs" => Ok(Algorithm::Rs),
            "reference" | "ref" => Ok(Algorithm::Reference),
            other => Err(HullError::InvalidArgument(format!(
                "unknown algorithm {other:?}; expected det, rs or reference"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub distribution: Distribution,
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub trials: usize,
    pub base_seed: u64,
    /// Off by default: bench inputs are already random, so the ray-shooting
    /// permutation is skipped.
    pub shuffle_rayshoot: bool,
    /// Threads used for point generation; timed regions never overlap.
    pub workers: usize,
}

impl BenchConfig {
    pub fn new(distribution: Distribution, sizes: Vec<usize>, algorithms: Vec<Algorithm>) -> Self {
        Self {
            distribution,
            sizes,
            algorithms,
            trials: 1000,
            base_seed: 0,
            shuffle_rayshoot: false,
            workers: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(HullError::InvalidArgument("trials must be at least 1".into()));
        }
        if self.sizes.is_empty() {
            return Err(HullError::InvalidArgument("no sizes given".into()));
        }
        if self.algorithms.is_empty() {
            return Err(HullError::InvalidArgument("no algorithms given".into()));
        }
        if self.workers == 0 {
            return Err(HullError::InvalidArgument("workers must be at least 1".into()));
        }
        self.sizes.iter().try_for_each(|&n| self.distribution.validate(n))
    }
}

/// One CSV row. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub distribution: String,
    pub n: usize,
    pub algorithm: String,
    pub trials: usize,
    pub mean_ms: f64,
    pub stddev_ms: f64,
    pub mean_orientation_tests: f64,
    pub mean_hull_size: f64,
    pub seed: u64,
}

struct Trial {
    ms: f64,
    orientation_tests: u64,
    hull_size: usize,
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    run_bench_with(cfg, |_| {})
}

/// [`run_bench`], calling `progress` as each record completes.
pub fn run_bench_with(cfg: &BenchConfig, mut progress: impl FnMut(&BenchRecord)) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let timing = Mutex::new(());
    let mut records = Vec::with_capacity(cfg.sizes.len() * cfg.algorithms.len());
    for &n in &cfg.sizes {
        for &algo in &cfg.algorithms {
            // warm-up, untimed and unrecorded
            let warm = generate(cfg.distribution, n, cfg.base_seed)?;
            algo.run(&warm, cfg.base_seed, cfg.shuffle_rayshoot, &mut Stats::new())?;

            let trials = run_trials(cfg, n, algo, &timing)?;
            let record = summarize(cfg, n, algo, &trials);
            progress(&record);
            records.push(record);
        }
    }
    Ok(records)
}

fn run_trials(cfg: &BenchConfig, n: usize, algo: Algorithm, timing: &Mutex<()>) -> Result<Vec<Trial>> {
    let one = |t: usize| -> Result<Trial> {
        let seed = cfg.base_seed.wrapping_add(t as u64);
        let points = generate(cfg.distribution, n, seed)?;
        let mut stats = Stats::new();
        let _guard = timing.lock().unwrap_or_else(|e| e.into_inner());
        let start = Instant::now();
        let hull = algo.run(&points, seed, cfg.shuffle_rayshoot, &mut stats)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(Trial { ms, orientation_tests: stats.orientation_tests, hull_size: hull.len() })
    };

    let workers = cfg.workers.min(cfg.trials);
    if workers <= 1 {
        return (0..cfg.trials).map(one).collect();
    }
    // Strided assignment; results are put back in trial order.
    let mut slots: Vec<Option<Result<Trial>>> = (0..cfg.trials).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let one = &one;
                scope.spawn(move || (w..cfg.trials).step_by(workers).map(|t| (t, one(t))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (t, res) in h.join().expect("bench worker panicked") {
                slots[t] = Some(res);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("every trial ran")).collect()
}

fn summarize(cfg: &BenchConfig, n: usize, algo: Algorithm, trials: &[Trial]) -> BenchRecord {
    let k = trials.len() as f64;
    let mean_ms = trials.iter().map(|t| t.ms).sum::<f64>() / k;
    let stddev_ms = if trials.len() > 1 {
        (trials.iter().map(|t| (t.ms - mean_ms).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
    } else {
        0.0
    };
    // Integer sums keep the counter means independent of summation order.
    let tests: u64 = trials.iter().map(|t| t.orientation_tests).sum();
    let hull: usize = trials.iter().map(|t| t.hull_size).sum();
    BenchRecord {
        distribution: cfg.distribution.to_string(),
        n,
        algorithm: algo.name().to_string(),
        trials: trials.len(),
        mean_ms,
        stddev_ms,
        mean_orientation_tests: tests as f64 / k,
        mean_hull_size: hull as f64 / k,
        seed: cfg.base_seed,
    }
}

pub fn write_csv_to<W: Write>(records: &[BenchRecord], w: W) -> std::result::Result<(), csv::Error> {
    let mut wtr = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    wtr.write_record(CSV_HEADER.split(','))?;
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|source| HullError::Io { path: path.to_owned(), source })?;
    write_csv_to(records, std::io::BufWriter::new(file)).map_err(|source| HullError::Csv { path: path.to_owned(), source })
}

pub fn read_csv_from<R: std::io::Read>(r: R) -> std::result::Result<Vec<BenchRecord>, csv::Error> {
    csv::Reader::from_reader(r).deserialize().collect()
}

pub fn read_csv(path: &Path) -> Result<Vec<BenchRecord>> {
    let file = std::fs::File::open(path).map_err(|source| HullError::Io { path: path.to_owned(), source })?;
    read_csv_from(file).map_err(|source| HullError::Csv { path: path.to_owned(), source })
}
