//! Seeded point distributions.
//!
//! Every generator draws from [`ChaCha8Rng`] seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, whose output is fixed across platforms
//! and releases, so `(distribution, n, seed)` always yields the same points.

use std::f64::consts::TAU;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HullError, Result};
use crate::geom::{Orient, Point};

/// Largest exponent used by the exponential constructions. Coordinates reach
/// `2^(2 * 300)`, and the products inside an orientation test stay below
/// `2^(3 * 300)`, inside the binary64 range.
pub const EXPONENT_CAP: usize = 300;

/// Name of the generator backing every distribution, for bench logs.
pub const RNG_NAME: &str = "ChaCha8Rng (rand_chacha 0.9, seed_from_u64)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Uniform in the unit square `[0, 1)^2`.
    Square,
    /// Uniform in the open unit disk.
    Circle,
    /// Uniform angle on the unit circle.
    OnCircle,
    /// `(x, x^2)` with `x` uniform in `[0, 1)`.
    Quad,
    /// `(2^i, 2^(2i))` for `i = 1..=n`, shuffled.
    Worst,
    /// `(0, 0)`, the parabola points `(2^i, 2^(2i))` for `i = 1..h`, and
    /// `n - h` uniform points strictly inside the triangle
    /// `(0,0), (2,4), (4,16)`, shuffled. The hull has exactly `h` vertices and
    /// deterministic Quickhull recurses `h - 2` levels deep over all the fill.
    Adversarial { h: usize },
}

impl Distribution {
    pub const NAMES: [&'static str; 6] = ["square", "circle", "oncircle", "quad", "worst", "adversarial"];

    /// Parse a distribution name; `h` is required for `adversarial` only.
    pub fn from_name(name: &str, h: Option<usize>) -> Result<Self> {
        let d = match name.to_ascii_lowercase().as_str() {
            "square" => Distribution::Square,
            "circle" => Distribution::Circle,
            "oncircle" | "on-circle" => Distribution::OnCircle,
            "quad" => Distribution::Quad,
            "worst" => Distribution::Worst,
            "adversarial" => match h {
                Some(h) => Distribution::Adversarial { h },
                None => {
                    return Err(HullError::InvalidArgument(
                        "the adversarial distribution needs a hull size h".into(),
                    ))
                }
            },
            other => {
                return Err(HullError::InvalidArgument(format!(
                    "unknown distribution {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        };
        Ok(d)
    }

    /// Check the size limits for `n` points without generating anything.
    pub fn validate(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(HullError::InvalidArgument("n must be at least 1".into()));
        }
        match *self {
            Distribution::Worst if n > EXPONENT_CAP => {
                Err(HullError::CapExceeded { what: "n", value: n, cap: EXPONENT_CAP })
            }
            Distribution::Adversarial { h } if h < 3 || h > n => Err(HullError::InvalidH { h, max: n }),
            Distribution::Adversarial { h } if h > EXPONENT_CAP => {
                Err(HullError::CapExceeded { what: "h", value: h, cap: EXPONENT_CAP })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Square => f.write_str("square"),
            Distribution::Circle => f.write_str("circle"),
            Distribution::OnCircle => f.write_str("oncircle"),
            Distribution::Quad => f.write_str("quad"),
            Distribution::Worst => f.write_str("worst"),
            Distribution::Adversarial { h } => write!(f, "adversarial-h{h}"),
        }
    }
}

/// Exactly `n` points from `d`.
pub fn generate(d: Distribution, n: usize, seed: u64) -> Result<Vec<Point>> {
    d.validate(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = match d {
        Distribution::Square => (0..n).map(|_| Point::new(rng.random(), rng.random())).collect(),
        Distribution::Circle => (0..n).map(|_| in_disk(&mut rng)).collect(),
        Distribution::OnCircle => (0..n)
            .map(|_| {
                let (sin, cos) = (TAU * rng.random::<f64>()).sin_cos();
                Point::new(cos, sin)
            })
            .collect(),
        Distribution::Quad => (0..n)
            .map(|_| {
                let x: f64 = rng.random();
                Point::new(x, x * x)
            })
            .collect(),
        Distribution::Worst => {
            let mut v: Vec<Point> = (1..=n as i32).map(parabola_point).collect();
            v.shuffle(&mut rng);
            v
        }
        Distribution::Adversarial { h } => {
            let mut v = Vec::with_capacity(n);
            v.push(Point::new(0.0, 0.0));
            v.extend((1..h as i32).map(parabola_point));
            let tri = fill_triangle();
            v.extend((h..n).map(|_| in_triangle(&mut rng, tri)));
            v.shuffle(&mut rng);
            v
        }
    };
    Ok(points)
}

/// `(2^i, 2^(2i))`, exact in binary64 for `i <= 511`.
pub fn parabola_point(i: i32) -> Point {
    Point::new(2f64.powi(i), 2f64.powi(2 * i))
}

/// Triangle holding the adversarial fill, counter-clockwise.
pub fn fill_triangle() -> [Point; 3] {
    [Point::new(0.0, 0.0), parabola_point(1), parabola_point(2)]
}

fn in_disk<R: Rng>(rng: &mut R) -> Point {
    loop {
        let x = 2.0 * rng.random::<f64>() - 1.0;
        let y = 2.0 * rng.random::<f64>() - 1.0;
        if x * x + y * y < 1.0 {
            return Point::new(x, y);
        }
    }
}

fn in_triangle<R: Rng>(rng: &mut R, [o, a, b]: [Point; 3]) -> Point {
    loop {
        let (mut u, mut v): (f64, f64) = (rng.random(), rng.random());
        if u + v > 1.0 {
            (u, v) = (1.0 - u, 1.0 - v);
        }
        let x = o.x() + u * (a.x() - o.x()) + v * (b.x() - o.x());
        let y = o.y() + u * (a.y() - o.y()) + v * (b.y() - o.y());
        let p = Point::new(x, y);
        let strictly_inside = Orient::of(o, a, p) == Orient::Left
            && Orient::of(a, b, p) == Orient::Left
            && Orient::of(b, o, p) == Orient::Left;
        if strictly_inside {
            return p;
        }
    }
}
