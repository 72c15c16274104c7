//! Independent hull oracles: Andrew's monotone chain and an `O(n^3)`
//! enumeration of hull edges. Both use the same exact predicate as the
//! algorithms under test, so a disagreement points at algorithm logic.

use std::collections::BTreeSet;

use crate::error::{HullError, Result};
use crate::geom::{orientation, Orient, Point};
use crate::{Hull, Stats};

/// Largest input accepted by [`brute_force_hull_edges`].
pub const BRUTE_FORCE_MAX: usize = 64;

pub fn monotone_chain(points: &[Point]) -> Result<Hull> {
    monotone_chain_counted(points, &mut Stats::new())
}

/// [`monotone_chain`], counting its orientation tests.
pub fn monotone_chain_counted(points: &[Point], stats: &mut Stats) -> Result<Hull> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() <= 2 {
        return Ok(Hull::from_ccw(sorted));
    }

    let mut hull: Vec<Point> = Vec::with_capacity(sorted.len() + 1);
    // lower chain, left to right
    for &p in &sorted {
        while hull.len() >= 2 && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p, stats) != Orient::Left {
            hull.pop();
        }
        hull.push(p);
    }
    // upper chain, right to left
    let lower_len = hull.len() + 1;
    for &p in sorted.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p, stats) != Orient::Left
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(Hull::from_ccw(hull))
}

/// All ordered pairs `(a, b)` of distinct input points such that every input
/// point lies on or right of `a -> b`, and every point on the line lies within
/// the segment. These are the hull edges traversed clockwise; collinear input
/// yields its two extremes in both directions.
pub fn brute_force_hull_edges(points: &[Point]) -> Result<BTreeSet<(Point, Point)>> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    if points.len() > BRUTE_FORCE_MAX {
        return Err(HullError::TooLarge { len: points.len(), max: BRUTE_FORCE_MAX });
    }
    let mut distinct = points.to_vec();
    distinct.sort_unstable();
    distinct.dedup();

    let mut edges = BTreeSet::new();
    for &a in &distinct {
        for &b in &distinct {
            if a == b {
                continue;
            }
            let is_edge = distinct.iter().all(|&u| match Orient::of(a, b, u) {
                Orient::Left => false,
                Orient::Right => true,
                Orient::Collinear => a.min(b) <= u && u <= a.max(b),
            });
            if is_edge {
                edges.insert((a, b));
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn square_with_center() {
        let input = pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0.5, 0.5)]);
        let h = monotone_chain(&input).unwrap();
        assert_eq!(h.vertices(), pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).as_slice());
    }

    #[test]
    fn collinear_gives_extremes() {
        let input = pts(&[(2., 2.), (0., 0.), (4., 4.), (1., 1.), (3., 3.)]);
        let h = monotone_chain(&input).unwrap();
        assert_eq!(h.vertices(), pts(&[(0., 0.), (4., 4.)]).as_slice());
        assert_eq!(h.check(&input), Ok(()));
    }

    #[test]
    fn single_and_duplicates() {
        let input = pts(&[(1., 2.), (1., 2.), (1., 2.)]);
        assert_eq!(monotone_chain(&input).unwrap().vertices(), &[Point::new(1., 2.)]);
        assert!(matches!(monotone_chain(&[]), Err(HullError::EmptyInput)));
    }

    #[test]
    fn drops_collinear_boundary_points() {
        let input = pts(&[(0., 0.), (1., 0.), (2., 0.), (2., 2.), (1., 2.), (0., 2.), (0., 1.)]);
        let h = monotone_chain(&input).unwrap();
        assert_eq!(h.len(), 4);
        assert_eq!(h.check(&input), Ok(()));
    }

    #[test]
    fn brute_force_triangle() {
        let e = brute_force_hull_edges(&pts(&[(0., 0.), (2., 0.), (1., 1.)])).unwrap();
        assert_eq!(e.len(), 3);
        // clockwise: (0,0) -> (1,1) -> (2,0) -> (0,0)
        assert!(e.contains(&(Point::new(0., 0.), Point::new(1., 1.))));
    }

    #[test]
    fn brute_force_collinear() {
        let e = brute_force_hull_edges(&pts(&[(0., 0.), (1., 0.), (2., 0.)])).unwrap();
        let expected: BTreeSet<_> = [
            (Point::new(0., 0.), Point::new(2., 0.)),
            (Point::new(2., 0.), Point::new(0., 0.)),
        ]
        .into_iter()
        .collect();
        assert_eq!(e, expected);
    }

    #[test]
    fn brute_force_guard() {
        let many: Vec<Point> = (0..65).map(|i| Point::new(i as f64, (i * i) as f64)).collect();
        assert!(matches!(brute_force_hull_edges(&many), Err(HullError::TooLarge { .. })));
    }
}
