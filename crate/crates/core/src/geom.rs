//! Points and the counted predicates every hull algorithm is built from.
//!
//! All predicates are exact: a sign is never misreported, whatever the
//! magnitude of the coordinates (see [`crate::exact`]).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{HullError, Result};
use crate::exact::diff_product_sign;
use crate::Stats;

/// A point with finite binary64 coordinates. `-0.0` is normalised to `0.0`
/// so that equality and the lexicographic order agree.
#[derive(Clone, Copy, PartialEq)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    /// Panics on a non-finite coordinate; see [`Point::try_new`].
    pub fn new(x: f64, y: f64) -> Self {
        match Self::try_new(x, y) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(HullError::NonFinite { x, y });
        }
        Ok(Self { x: x + 0.0, y: y + 0.0 })
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    /// Lexicographic order: x first, then y.
    #[inline]
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x.total_cmp(&other.x).then(self.y.total_cmp(&other.y))
    }
}

impl Eq for Point {}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl std::hash::Hash for Point {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.x.to_bits().hash(state);
        self.y.to_bits().hash(state);
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    /// `x y`, each the shortest decimal that parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coord(f, self.x)?;
        f.write_str(" ")?;
        write_coord(f, self.y)
    }
}

fn write_coord(f: &mut fmt::Formatter<'_>, v: f64) -> fmt::Result {
    // Both forms are shortest round-trip; the exponent form avoids
    // hundreds of digits for the exponential constructions.
    let a = v.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        write!(f, "{v:e}")
    } else {
        write!(f, "{v}")
    }
}

/// Sign of the determinant of `(b - a, c - a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orient {
    Left,
    Right,
    Collinear,
}

impl Orient {
    /// Uncounted orientation, for oracles and invariant checks.
    pub fn of(a: Point, b: Point, c: Point) -> Orient {
        from_sign(diff_product_sign(b.x, a.x, c.y, a.y, b.y, a.y, c.x, a.x))
    }

    pub fn reversed(self) -> Orient {
        match self {
            Orient::Left => Orient::Right,
            Orient::Right => Orient::Left,
            Orient::Collinear => Orient::Collinear,
        }
    }
}

#[inline]
fn from_sign(s: Ordering) -> Orient {
    match s {
        Ordering::Greater => Orient::Left,
        Ordering::Less => Orient::Right,
        Ordering::Equal => Orient::Collinear,
    }
}

/// A directed base segment `p -> r`. The points of a subproblem lie strictly
/// to its left; `r - p` plays the role of the horizontal axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    p: Point,
    r: Point,
}

impl Frame {
    pub fn new(p: Point, r: Point) -> Result<Self> {
        if p == r {
            return Err(HullError::InvalidArgument(format!(
                "frame endpoints coincide at {p:?}"
            )));
        }
        Ok(Self { p, r })
    }

    #[inline]
    pub(crate) fn new_unchecked(p: Point, r: Point) -> Self {
        debug_assert!(p != r);
        Self { p, r }
    }

    #[inline]
    pub fn p(&self) -> Point {
        self.p
    }

    #[inline]
    pub fn r(&self) -> Point {
        self.r
    }

    /// Exact comparison of `along(self, u)` with `along(self, v)`.
    #[inline]
    pub fn cmp_along(&self, u: Point, v: Point) -> Ordering {
        // sign of (u - v) . (r - p)
        let (p, r) = (self.p, self.r);
        diff_product_sign(u.x, v.x, r.x, p.x, v.y, u.y, r.y, p.y)
    }
}

/// Orientation of `c` relative to the directed line `a -> b`. Counts one test.
#[inline]
pub fn orientation(a: Point, b: Point, c: Point, stats: &mut Stats) -> Orient {
    stats.orientation_tests += 1;
    Orient::of(a, b, c)
}

/// Scalar projection `(u - p) . (r - p)`, rounded.
///
/// Membership in the closed halfplanes left and right of a ray is decided with
/// [`Frame::cmp_along`], which compares these values exactly.
pub fn along(f: &Frame, u: Point) -> f64 {
    let (p, r) = (f.p, f.r);
    (u.x - p.x) * (r.x - p.x) + (u.y - p.y) * (r.y - p.y)
}

/// `u` strictly left of `a -> b`. Collinear is not above.
#[inline]
pub fn above_line(a: Point, b: Point, u: Point, stats: &mut Stats) -> bool {
    debug_assert!(a != b, "degenerate line; use above_degenerate");
    orientation(a, b, u, stats) == Orient::Left
}

/// `u` strictly left of the line through `q` with direction `r - p`.
#[inline]
pub fn above_degenerate(f: &Frame, q: Point, u: Point, stats: &mut Stats) -> bool {
    side_of_parallel(f, q, u, stats) == Orient::Left
}

/// Orientation of `u` relative to the line through `q` parallel to the
/// frame's base, without rounding `q + (r - p)`. Counts one test.
#[inline]
pub(crate) fn side_of_parallel(f: &Frame, q: Point, u: Point, stats: &mut Stats) -> Orient {
    stats.orientation_tests += 1;
    let (p, r) = (f.p, f.r);
    // (r.x - p.x)(u.y - q.y) - (r.y - p.y)(u.x - q.x)
    from_sign(diff_product_sign(r.x, p.x, u.y, q.y, r.y, p.y, u.x, q.x))
}
