//! ray_shoot against a brute-force bridge built from the reference hull.

use hullkit::{monotone_chain, ray_shoot, tangent_scan, Bridge, Frame, Orient, Point, Side, Stats};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

/// Points strictly left of the frame base, drawn from a small integer grid or
/// from continuous coordinates.
fn instance(rng: &mut ChaCha8Rng, f: &Frame, n: usize, grid: bool) -> Vec<Point> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u = if grid {
            pt(rng.random_range(-3..14) as f64, rng.random_range(-3..9) as f64)
        } else {
            pt(rng.random_range(-3.0..14.0), rng.random_range(-3.0..9.0))
        };
        if Orient::of(f.p(), f.r(), u) == Orient::Left {
            out.push(u);
        }
    }
    out
}

/// Every bridge a correct ray shoot may report for pivot `q`: a hull edge of
/// `points ∪ {p, r, q}` on the far side of the base spanning `q` along it,
/// or `(q, q)` when `q` is the hull vertex farthest from the base.
fn valid_bridges(f: &Frame, points: &[Point], q: Point) -> Vec<Bridge> {
    let mut all = points.to_vec();
    all.extend([f.p(), f.r(), q]);
    let hull = monotone_chain(&all).unwrap();
    let v = hull.vertices();
    let mut out = Vec::new();
    for i in 0..v.len() {
        // counter-clockwise edge v[i] -> v[i+1]; the frame runs the other way
        let (t, s) = (v[i], v[(i + 1) % v.len()]);
        let spans = f.cmp_along(s, q).is_le() && f.cmp_along(q, t).is_le();
        let upper = f.cmp_along(s, t).is_lt();
        if spans && upper {
            out.push(Bridge { s, t });
        }
    }
    if v.contains(&q) {
        let b = Bridge { s: q, t: q };
        if b.is_valid_for(f, q, &all) {
            out.push(b);
        }
    }
    out
}

fn frames() -> Vec<Frame> {
    vec![
        Frame::new(pt(0., 0.), pt(10., 0.)).unwrap(),
        Frame::new(pt(0., 0.), pt(7., 3.)).unwrap(),
        Frame::new(pt(10., 2.), pt(0., -1.)).unwrap(),
        Frame::new(pt(1., 0.), pt(1., 5.)).unwrap(),
    ]
}

#[test]
fn agrees_with_brute_force_on_small_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    for f in frames() {
        for round in 0..1500 {
            let n = rng.random_range(1..=8);
            let pts = instance(&mut rng, &f, n, round % 2 == 0);
            let q = pts[rng.random_range(0..n)];
            let rest: Vec<Point> = pts.iter().copied().filter(|&u| u != q).collect();
            let valid = valid_bridges(&f, &rest, q);
            assert!(!valid.is_empty());
            for shuffle in [false, true] {
                let b = ray_shoot(&f, &rest, q, shuffle, &mut rng, &mut Stats::new());
                assert!(
                    valid.contains(&b),
                    "frame {f:?} q {q:?} rest {rest:?}: got {b:?}, valid {valid:?}"
                );
                let mut with_ends = rest.clone();
                with_ends.extend([f.p(), f.r()]);
                assert!(b.is_valid_for(&f, q, &with_ends));
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn order_does_not_matter_for_generic_pivots() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f = Frame::new(pt(0., 0.), pt(10., 0.)).unwrap();
    for _ in 0..500 {
        let n = rng.random_range(2..=8);
        let pts = instance(&mut rng, &f, n, false);
        let q = pts[0];
        let rest = pts[1..].to_vec();
        let valid = valid_bridges(&f, &rest, q);
        if valid.len() != 1 {
            continue;
        }
        let mut perm = rest.clone();
        for _ in 0..6 {
            perm.shuffle(&mut rng);
            let b = ray_shoot(&f, &perm, q, false, &mut rng, &mut Stats::new());
            assert_eq!(b, valid[0]);
        }
    }
}

#[test]
fn pivot_inside_points_tolerated() {
    // q may also appear in the point list
    let f = Frame::new(pt(0., 0.), pt(10., 0.)).unwrap();
    let pts = [pt(2., 2.), pt(5., 3.), pt(8., 2.)];
    let b = ray_shoot(&f, &pts, pts[1], true, &mut ChaCha8Rng::seed_from_u64(1), &mut Stats::new());
    assert_eq!(b, Bridge { s: pt(5., 3.), t: pt(5., 3.) });
}

#[test]
fn counts_stay_within_two_n_on_average() {
    let f = Frame::new(pt(0., 0.), pt(1., 0.)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 2000;
    let mut total = 0u64;
    let trials = 50;
    for _ in 0..trials {
        let pts: Vec<Point> = (0..n).map(|_| pt(rng.random(), rng.random_range(f64::MIN_POSITIVE..1.0))).collect();
        let mut stats = Stats::new();
        ray_shoot(&f, &pts[1..], pts[0], true, &mut rng, &mut stats);
        assert_eq!(stats.ray_shoot_calls, 1);
        total += stats.orientation_tests;
    }
    assert!(total as f64 / trials as f64 <= 2.0 * n as f64);
}

#[test]
fn tangent_scan_finds_extreme_member() {
    let f = Frame::new(pt(0., 0.), pt(10., 0.)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..2000 {
        let anchor = pt(rng.random_range(0.0..3.0), rng.random_range(0.0..5.0));
        let n = rng.random_range(1..10);
        let set: Vec<Point> = (0..n).map(|_| pt(rng.random_range(4..10) as f64, rng.random_range(0..6) as f64)).collect();
        let mut stats = Stats::new();
        let t = tangent_scan(anchor, &set, Side::RightOfPivot, &f, &mut stats);
        assert_eq!(stats.orientation_tests, n as u64 - 1);
        assert!(set.contains(&t));
        for &u in &set {
            let o = Orient::of(anchor, t, u);
            assert_ne!(o, Orient::Left, "{u:?} above {anchor:?}->{t:?}");
            if o == Orient::Collinear {
                assert!(f.cmp_along(u, t).is_le());
            }
        }
    }
}
