use std::collections::HashSet;

use thiserror::Error;

use crate::geom::{Orient, Point};

/// Distinct extreme points in counter-clockwise order, starting at the
/// lexicographically smallest vertex.
///
/// Degenerate inputs follow one convention across all algorithms: a single
/// distinct point gives one vertex, collinear input gives its two extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hull {
    vertices: Vec<Point>,
}

/// A violated [`Hull`] invariant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HullDefect {
    #[error("hull has no vertices")]
    Empty,
    #[error("vertex {0:?} appears more than once")]
    Duplicate(Point),
    #[error("vertex {0:?} is not an input point")]
    NotAnInput(Point),
    #[error("turn at vertex {index} ({at:?}) is not a strict left turn")]
    NotConvex { index: usize, at: Point },
    #[error("input point {0:?} lies outside the hull")]
    Outside(Point),
    #[error("hull does not start at its lexicographically smallest vertex")]
    NotNormalised,
}

impl Hull {
    /// Wrap a counter-clockwise vertex cycle, rotating it to start at the
    /// lexicographically smallest vertex. No other checks are made.
    pub fn from_ccw(mut vertices: Vec<Point>) -> Self {
        if let Some((start, _)) = vertices.iter().enumerate().min_by(|a, b| a.1.lex_cmp(b.1)) {
            vertices.rotate_left(start);
        }
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Equality as cyclic sequences (same vertices, same order, any start).
    pub fn cyclic_eq(&self, other: &Hull) -> bool {
        let (a, b) = (&self.vertices, &other.vertices);
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..b.len()).any(|shift| a.iter().zip(b.iter().cycle().skip(shift)).all(|(x, y)| x == y))
    }

    /// Directed boundary edges `(v_i, v_{i+1})`, closing back to the start.
    /// A two-vertex hull yields both directions; a single vertex yields none.
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let v = &self.vertices;
        if v.len() < 2 {
            return Vec::new();
        }
        (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect()
    }

    /// Check every hull invariant against the input that produced it.
    ///
    /// Containment is tested against each edge, so this is `O(n h)`.
    pub fn check(&self, input: &[Point]) -> Result<(), HullDefect> {
        let v = &self.vertices;
        if v.is_empty() {
            return Err(HullDefect::Empty);
        }
        if v.iter().skip(1).any(|p| p.lex_cmp(&v[0]).is_lt()) {
            return Err(HullDefect::NotNormalised);
        }
        let mut seen = HashSet::with_capacity(v.len());
        for &p in v {
            if !seen.insert(p) {
                return Err(HullDefect::Duplicate(p));
            }
        }
        let inputs: HashSet<Point> = input.iter().copied().collect();
        if let Some(&p) = v.iter().find(|p| !inputs.contains(p)) {
            return Err(HullDefect::NotAnInput(p));
        }
        match v.len() {
            1 => {
                if let Some(&p) = input.iter().find(|&&p| p != v[0]) {
                    return Err(HullDefect::Outside(p));
                }
            }
            2 => {
                let (a, b) = (v[0], v[1]);
                for &p in input {
                    let on_segment = Orient::of(a, b, p) == Orient::Collinear
                        && a.min(b) <= p
                        && p <= a.max(b);
                    if !on_segment {
                        return Err(HullDefect::Outside(p));
                    }
                }
            }
            n => {
                for i in 0..n {
                    let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
                    if Orient::of(a, b, c) != Orient::Left {
                        return Err(HullDefect::NotConvex { index: (i + 1) % n, at: b });
                    }
                }
                for &p in input {
                    if (0..n).any(|i| Orient::of(v[i], v[(i + 1) % n], p) == Orient::Right) {
                        return Err(HullDefect::Outside(p));
                    }
                }
            }
        }
        Ok(())
    }
}
