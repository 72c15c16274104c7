//! Deterministic Quickhull, and the divide-and-conquer driver it shares with
//! the randomized variant.
//!
//! Both algorithms start from the lexicographically smallest and largest
//! points `p` and `r`, split the rest into the two sides of `p -> r`, and then
//! repeatedly replace a subproblem `(a -> b, S')` by an edge `s -> t` of the
//! hull plus the two subproblems strictly left of `a -> s` and `t -> b`.
//! Everything else in `S'` is pruned. Recursion runs on an explicit stack so
//! that inputs forcing linear depth do not exhaust the thread stack.

use crate::error::{HullError, Result};
use crate::geom::{orientation, side_of_parallel, Frame, Orient, Point};
use crate::{Hull, Stats};

/// One subproblem: the points strictly left of `frame`.
#[derive(Debug, Clone)]
pub(crate) struct Subproblem {
    pub frame: Frame,
    pub points: Vec<Point>,
    pub depth: u64,
    /// Structural identifier, independent of the order calls are processed.
    pub id: u64,
}

/// Result of one divide step: the hull edge `s -> t` found inside the
/// subproblem and the points left of `a -> s` and `t -> b`.
#[derive(Debug, Clone)]
pub(crate) struct Split {
    pub s: Point,
    pub t: Point,
    pub left: Vec<Point>,
    pub right: Vec<Point>,
}

/// A record of one recursive call, in processing order.
#[derive(Debug, Clone, PartialEq)]
pub struct CallRecord {
    pub depth: u64,
    /// Base segment; the call's points lie strictly left of it.
    pub frame: Frame,
    pub size: usize,
    /// Hull edge found by the call. Equal endpoints for deterministic
    /// Quickhull (the farthest point) and for degenerate bridges.
    pub s: Point,
    pub t: Point,
}

enum Task {
    Solve(Subproblem),
    Emit(Point),
}

pub(crate) fn drive<F>(
    points: &[Point],
    stats: &mut Stats,
    mut log: Option<&mut Vec<CallRecord>>,
    mut split: F,
) -> Result<Hull>
where
    F: FnMut(Subproblem, &mut Stats) -> Split,
{
    let (ip, ir) = extreme_indices(points).ok_or(HullError::EmptyInput)?;
    let (p, r) = (points[ip], points[ir]);
    if p == r {
        stats.points_pruned += (points.len() - 1) as u64;
        return Ok(Hull::from_ccw(vec![p]));
    }

    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (i, &u) in points.iter().enumerate() {
        if i == ip || i == ir {
            continue;
        }
        match orientation(p, r, u, stats) {
            Orient::Left => upper.push(u),
            Orient::Right => lower.push(u),
            Orient::Collinear => stats.points_pruned += 1,
        }
    }

    // Output runs p, lower chain, r, upper chain. A subproblem on `a -> b`
    // contributes its chain from b back to a.
    let mut stack = vec![];
    if !upper.is_empty() {
        stack.push(Task::Solve(Subproblem { frame: Frame::new_unchecked(p, r), points: upper, depth: 1, id: 1 }));
    }
    stack.push(Task::Emit(r));
    if !lower.is_empty() {
        stack.push(Task::Solve(Subproblem { frame: Frame::new_unchecked(r, p), points: lower, depth: 1, id: 2 }));
    }
    stack.push(Task::Emit(p));

    let mut vertices = Vec::new();
    while let Some(task) = stack.pop() {
        let sub = match task {
            Task::Emit(v) => {
                vertices.push(v);
                continue;
            }
            Task::Solve(sub) => sub,
        };
        stats.recursive_calls += 1;
        stats.observe_depth(sub.depth);
        let (a, b) = (sub.frame.p(), sub.frame.r());
        let (depth, id, size) = (sub.depth, sub.id, sub.points.len());
        let frame = sub.frame;

        let Split { s, t, left, right } = split(sub, stats);
        debug_assert!(s != b && t != a);

        if let Some(log) = log.as_deref_mut() {
            log.push(CallRecord { depth, frame, size, s, t });
        }

        let emit_s = s != a;
        let emit_t = t != s && t != b;
        let kept = left.len() + right.len() + emit_s as usize + emit_t as usize;
        stats.points_pruned += (size - kept) as u64;

        if !left.is_empty() {
            stack.push(Task::Solve(Subproblem {
                frame: Frame::new_unchecked(a, s),
                points: left,
                depth: depth + 1,
                id: child_id(id, 0),
            }));
        }
        if emit_s {
            stack.push(Task::Emit(s));
        }
        if emit_t {
            stack.push(Task::Emit(t));
        }
        if !right.is_empty() {
            stack.push(Task::Solve(Subproblem {
                frame: Frame::new_unchecked(t, b),
                points: right,
                depth: depth + 1,
                id: child_id(id, 1),
            }));
        }
    }
    Ok(Hull::from_ccw(vertices))
}

/// Indices of the lexicographically smallest and largest points: min x with
/// ties to min y, max x with ties to max y.
fn extreme_indices(points: &[Point]) -> Option<(usize, usize)> {
    let first = points.first()?;
    let (mut lo, mut hi) = (0, 0);
    let (mut lo_p, mut hi_p) = (*first, *first);
    for (i, &u) in points.iter().enumerate().skip(1) {
        if u < lo_p {
            lo = i;
            lo_p = u;
        }
        if u > hi_p {
            hi = i;
            hi_p = u;
        }
    }
    Some((lo, hi))
}

fn child_id(parent: u64, branch: u64) -> u64 {
    // splitmix64 finaliser
    let mut z = parent.wrapping_mul(2).wrapping_add(branch).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Partition `points` (excluding `s` and `t` themselves) into those strictly
/// left of `a -> s` and those strictly left of `t -> b`; the rest are dropped.
/// An empty side is skipped when `s == a` or `t == b`.
pub(crate) fn partition_outside(
    frame: &Frame,
    s: Point,
    t: Point,
    points: &[Point],
    stats: &mut Stats,
) -> (Vec<Point>, Vec<Point>) {
    let (a, b) = (frame.p(), frame.r());
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &u in points {
        if u == s || u == t {
            continue;
        }
        if s != a && orientation(a, s, u, stats) == Orient::Left {
            left.push(u);
        } else if t != b && orientation(t, b, u, stats) == Orient::Left {
            right.push(u);
        }
    }
    (left, right)
}

/// The point of `points` farthest from the line through the frame base,
/// ties broken lexicographically. Each point after the first costs one test.
pub fn farthest_point(f: &Frame, points: &[Point], stats: &mut Stats) -> Result<Point> {
    farthest_index(f, points, stats).map(|i| points[i]).ok_or(HullError::EmptyInput)
}

fn farthest_index(f: &Frame, points: &[Point], stats: &mut Stats) -> Option<usize> {
    let first = points.first()?;
    let mut best = 0;
    let mut best_p = *first;
    for (i, &u) in points.iter().enumerate().skip(1) {
        // u is farther than best iff it lies left of the base-parallel line
        // through best.
        match side_of_parallel(f, best_p, u, stats) {
            Orient::Left => {}
            Orient::Collinear if u < best_p => {}
            _ => continue,
        }
        best = i;
        best_p = u;
    }
    Some(best)
}

/// Deterministic Quickhull.
pub fn quickhull(points: &[Point], stats: &mut Stats) -> Result<Hull> {
    drive(points, stats, None, det_split)
}

/// [`quickhull`], also returning every recursive call in processing order.
pub fn quickhull_traced(points: &[Point], stats: &mut Stats) -> Result<(Hull, Vec<CallRecord>)> {
    let mut log = Vec::new();
    let hull = drive(points, stats, Some(&mut log), det_split)?;
    Ok((hull, log))
}

fn det_split(sub: Subproblem, stats: &mut Stats) -> Split {
    let i = farthest_index(&sub.frame, &sub.points, stats).expect("empty subproblem");
    let q = sub.points[i];
    let (left, right) = partition_outside(&sub.frame, q, q, &sub.points, stats);
    Split { s: q, t: q, left, right }
}
