//! Randomized ray-shooting Quickhull.
//!
//! Each call draws a pivot uniformly from its points, shoots a ray from it
//! perpendicular to the base, and splits on the hull edge the ray crosses.
//! Points inside the quadrilateral `(a, s, t, b)` are pruned. The output is
//! always the exact hull; only the operation counts depend on the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::quickhull::{drive, partition_outside, CallRecord, Split, Subproblem};
use crate::ray_shoot::ray_shoot;
use crate::{Hull, Stats};
use crate::geom::Point;

/// Knobs for [`rs_quickhull_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsOptions {
    pub seed: u64,
    /// Randomly permute each ray-shooting input. Without it the points are
    /// processed in the order the subproblem holds them.
    pub shuffle_rayshoot: bool,
}

impl RsOptions {
    pub fn new(seed: u64) -> Self {
        Self { seed, shuffle_rayshoot: true }
    }
}

pub fn rs_quickhull(points: &[Point], seed: u64, shuffle_rayshoot: bool, stats: &mut Stats) -> Result<Hull> {
    rs_quickhull_with(points, RsOptions { seed, shuffle_rayshoot }, stats)
}

pub fn rs_quickhull_with(points: &[Point], opts: RsOptions, stats: &mut Stats) -> Result<Hull> {
    drive(points, stats, None, |sub, stats| rs_split(sub, opts, stats))
}

/// [`rs_quickhull_with`], also returning every recursive call in processing order.
pub fn rs_quickhull_traced(points: &[Point], opts: RsOptions, stats: &mut Stats) -> Result<(Hull, Vec<CallRecord>)> {
    let mut log = Vec::new();
    let hull = drive(points, stats, Some(&mut log), |sub, stats| rs_split(sub, opts, stats))?;
    Ok((hull, log))
}

/// The random stream of one call depends only on the seed and the call's
/// position in the recursion tree.
fn call_rng(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn rs_split(sub: Subproblem, opts: RsOptions, stats: &mut Stats) -> Split {
    let Subproblem { frame, mut points, id, .. } = sub;
    let mut rng = call_rng(opts.seed, id);

    let last = points.len() - 1;
    let pick = rng.random_range(0..=last);
    points.swap(pick, last);
    let q = points[last];

    let bridge = ray_shoot(&frame, &points[..last], q, opts.shuffle_rayshoot, &mut rng, stats);
    let (s, t) = (bridge.s, bridge.t);
    let (left, right) = partition_outside(&frame, s, t, &points, stats);

    #[cfg(debug_assertions)]
    check_pruned(&frame, s, t, &points, &left, &right);

    Split { s, t, left, right }
}

/// Every pruned point lies in the closed quadrilateral `(a, s, t, b)`.
#[cfg(debug_assertions)]
fn check_pruned(frame: &crate::Frame, s: Point, t: Point, all: &[Point], left: &[Point], right: &[Point]) {
    use crate::geom::Orient;
    use std::collections::HashSet;

    let kept: HashSet<Point> = left.iter().chain(right).copied().collect();
    let (a, b) = (frame.p(), frame.r());
    let mut scratch = Stats::new();
    for &u in all.iter().filter(|u| !kept.contains(u)) {
        let below_bridge = if s == t {
            crate::geom::side_of_parallel(frame, s, u, &mut scratch) != Orient::Left
        } else {
            Orient::of(s, t, u) != Orient::Left
        };
        let inside = below_bridge
            && Orient::of(a, b, u) != Orient::Right
            && (s == a || Orient::of(a, s, u) != Orient::Left)
            && (t == b || Orient::of(t, b, u) != Orient::Left);
        debug_assert!(inside, "pruned {u:?} outside ({a:?}, {s:?}, {t:?}, {b:?})");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::monotone_chain;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn triangle_any_seed() {
        let input = [pt(0., 0.), pt(2., 1.), pt(1., 3.)];
        for seed in 0..20 {
            let h = rs_quickhull(&input, seed, true, &mut Stats::new()).unwrap();
            assert_eq!(h.vertices(), &[pt(0., 0.), pt(2., 1.), pt(1., 3.)]);
        }
    }

    #[test]
    fn hidden_bridge_endpoint_is_not_a_vertex() {
        let input = [pt(0., 0.), pt(10., 0.), pt(4., 1.), pt(5., 0.1), pt(6., 0.2)];
        let expected = monotone_chain(&input).unwrap();
        for seed in 0..50 {
            for shuffle in [false, true] {
                let h = rs_quickhull(&input, seed, shuffle, &mut Stats::new()).unwrap();
                assert_eq!(h, expected, "seed {seed}");
            }
        }
    }

    #[test]
    fn same_seed_same_trace() {
        let input: Vec<Point> = (0..200)
            .map(|i| {
                let a = i as f64 * 0.731;
                pt(a.cos() * (1.0 + (i % 7) as f64 * 0.01), a.sin())
            })
            .collect();
        let opts = RsOptions::new(42);
        let mut s1 = Stats::new();
        let mut s2 = Stats::new();
        let (h1, log1) = rs_quickhull_traced(&input, opts, &mut s1).unwrap();
        let (h2, log2) = rs_quickhull_traced(&input, opts, &mut s2).unwrap();
        assert_eq!(h1, h2);
        assert_eq!(log1, log2);
        assert_eq!(s1, s2);
        assert_eq!(s1.ray_shoot_calls, s1.recursive_calls);
    }

    #[test]
    fn grid_with_collinear_runs() {
        let input: Vec<Point> = (0..8).flat_map(|i| (0..8).map(move |j| pt(i as f64, j as f64))).collect();
        let expected = monotone_chain(&input).unwrap();
        assert_eq!(expected.len(), 4);
        for seed in 0..30 {
            let h = rs_quickhull(&input, seed, seed % 2 == 0, &mut Stats::new()).unwrap();
            assert_eq!(h, expected);
        }
    }
}
