//! Bridge finding by randomized incremental ray shooting.
//!
//! Given a frame `p -> r`, a point set strictly left of it and a pivot `q`,
//! find the edge of the upper hull (relative to the frame) crossed by the ray
//! from `q` perpendicular to the base. The candidate edge starts as the
//! degenerate `(q, q)`; each point that lands strictly above the current edge
//! replaces it with a tangent found by a linear scan over the points already
//! seen on the opposite side of the ray.
//!
//! The frame endpoints take part as if already processed. Without them an
//! edge of the subset's own hull can end at a point hidden behind the segment
//! to `p` or `r`, which would then be reported as a hull vertex.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::geom::{orientation, side_of_parallel, Frame, Orient, Point};
use crate::Stats;

/// The hull edge `s -> t` crossed by the ray, oriented like the frame base.
/// `s == t` is the degenerate edge: a zero-length segment parallel to the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bridge {
    pub s: Point,
    pub t: Point,
}

impl Bridge {
    pub fn is_degenerate(&self) -> bool {
        self.s == self.t
    }

    /// No point of `points` lies strictly above the bridge line, and the
    /// bridge spans `q` along the frame. Uncounted; for checks and tests.
    pub fn is_valid_for(&self, f: &Frame, q: Point, points: &[Point]) -> bool {
        if f.cmp_along(self.s, q).is_gt() || f.cmp_along(q, self.t).is_gt() {
            return false;
        }
        let mut scratch = Stats::new();
        points.iter().chain([f.p(), f.r(), q].iter()).all(|&u| {
            let side = if self.is_degenerate() {
                side_of_parallel(f, self.s, u, &mut scratch)
            } else {
                Orient::of(self.s, self.t, u)
            };
            side != Orient::Left
        })
    }
}

/// Which side of the ray a tangent scan searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Searching `S_l` for `s'`; the anchor lies right of the ray.
    LeftOfPivot,
    /// Searching `S_r` for `t'`; the anchor lies left of the ray.
    RightOfPivot,
}

/// The member of `side_set` whose line to `anchor` leaves no member strictly
/// above it.
///
/// Keeps a running best and replaces it whenever the scanned point is strictly
/// above the line through the anchor and the best, one orientation test per
/// member after the first. Collinear ties go to the point farther from the
/// anchor along the base.
pub fn tangent_scan(
    anchor: Point,
    side_set: &[Point],
    side: Side,
    f: &Frame,
    stats: &mut Stats,
) -> Point {
    scan(anchor, side_set.iter().copied(), side, f, stats).expect("tangent scan over an empty set")
}

fn scan(anchor: Point, mut members: impl Iterator<Item = Point>, side: Side, f: &Frame, stats: &mut Stats) -> Option<Point> {
    let mut best = members.next()?;
    for u in members {
        let o = match side {
            Side::RightOfPivot => orientation(anchor, best, u, stats),
            Side::LeftOfPivot => orientation(best, anchor, u, stats),
        };
        let replace = match o {
            Orient::Left => true,
            Orient::Right => false,
            Orient::Collinear => match side {
                Side::RightOfPivot => f.cmp_along(u, best).is_gt(),
                Side::LeftOfPivot => f.cmp_along(u, best).is_lt(),
            },
        };
        if replace {
            best = u;
        }
    }
    Some(best)
}

/// Find the bridge of `points ∪ {q, p, r}` crossed by the ray from `q`.
///
/// `points` are processed in a uniformly random order when `shuffle` is set,
/// otherwise in the given order. `q` may or may not also appear in `points`.
pub fn ray_shoot<R: Rng + ?Sized>(
    f: &Frame,
    points: &[Point],
    q: Point,
    shuffle: bool,
    rng: &mut R,
    stats: &mut Stats,
) -> Bridge {
    if shuffle {
        let mut order = points.to_vec();
        order.shuffle(rng);
        ray_shoot_ordered(f, &order, q, stats)
    } else {
        ray_shoot_ordered(f, points, q, stats)
    }
}

pub(crate) fn ray_shoot_ordered(f: &Frame, points: &[Point], q: Point, stats: &mut Stats) -> Bridge {
    stats.ray_shoot_calls += 1;

    let mut left = Vec::with_capacity(points.len() / 2 + 3);
    let mut right = Vec::with_capacity(points.len() / 2 + 3);
    left.push(q);
    right.push(q);
    for end in [f.p(), f.r()] {
        insert_by_side(f, q, end, &mut left, &mut right);
    }

    let mut s = q;
    let mut t = q;
    let mut degenerate = true;

    for &u in points {
        let side = if degenerate {
            side_of_parallel(f, s, u, stats)
        } else {
            orientation(s, t, u, stats)
        };
        match side {
            Orient::Left => {
                // The new tangent point is a vertex of the old hull on the far
                // side of the ray, so it lies at or beyond the old endpoint on
                // that side. Nearer members are skipped without a test.
                let right_of = |t: Point| right.iter().copied().filter(move |&v| f.cmp_along(v, t).is_ge());
                let left_of = |s: Point| left.iter().copied().filter(move |&v| f.cmp_along(v, s).is_le());
                let to_pivot = f.cmp_along(u, q);
                if to_pivot.is_le() {
                    let tp = scan(u, right_of(t), Side::RightOfPivot, f, stats).expect("t is on the right");
                    if to_pivot.is_eq() && f.cmp_along(tp, u).is_eq() {
                        // u sits on the ray and nothing seen lies strictly right
                        // of it, so the edge comes from the left side. p and r
                        // cannot both lie on the ray, so that side is not empty.
                        let sp = scan(u, left_of(s), Side::LeftOfPivot, f, stats).expect("s is on the left");
                        debug_assert!(f.cmp_along(sp, u).is_lt());
                        (s, t, degenerate) = (sp, u, false);
                    } else {
                        (s, t, degenerate) = (u, tp, false);
                    }
                } else {
                    let sp = scan(u, left_of(s), Side::LeftOfPivot, f, stats).expect("s is on the left");
                    (s, t, degenerate) = (sp, u, false);
                }
            }
            Orient::Collinear => {
                // On the bridge line but beyond an endpoint: stretch the edge so
                // that its endpoints stay the extreme points of that line.
                if f.cmp_along(u, s).is_lt() {
                    s = u;
                    degenerate = false;
                }
                if f.cmp_along(u, t).is_gt() {
                    t = u;
                    degenerate = false;
                }
            }
            Orient::Right => {}
        }
        insert_by_side(f, q, u, &mut left, &mut right);
    }

    let bridge = Bridge { s, t };
    #[cfg(debug_assertions)]
    debug_assert!(
        bridge.is_valid_for(f, q, points),
        "invalid bridge {bridge:?} for pivot {q:?} in {f:?}"
    );
    bridge
}

/// Closed halfplanes: a point exactly on the ray joins both sides.
#[inline]
fn insert_by_side(f: &Frame, q: Point, u: Point, left: &mut Vec<Point>, right: &mut Vec<Point>) {
    match f.cmp_along(u, q) {
        Ordering::Less => left.push(u),
        Ordering::Greater => right.push(u),
        Ordering::Equal => {
            left.push(u);
            right.push(u);
        }
    }
}
