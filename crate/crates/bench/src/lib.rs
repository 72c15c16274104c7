//! Shared inputs for the criterion benches.

use hullkit::{generate, Distribution, Point};

/// Seed used for every bench input, so runs compare like with like.
pub const BENCH_SEED: u64 = 0x5eed;

pub fn fixture(d: Distribution, n: usize) -> Vec<Point> {
    generate(d, n, BENCH_SEED).expect("bench fixture within generator limits")
}
