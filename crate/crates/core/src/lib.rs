//! Planar convex hulls with exact predicates: deterministic Quickhull, a
//! randomized ray-shooting Quickhull, a monotone-chain reference, seeded
//! point generators and a small benchmark harness.
//!
//! ```
//! use hullkit::{quickhull, Point, Stats};
//!
//! let pts = [Point::new(0., 0.), Point::new(2., 0.), Point::new(1., 1.), Point::new(1., 3.)];
//! let mut stats = Stats::new();
//! let hull = quickhull(&pts, &mut stats).unwrap();
//! assert_eq!(hull.vertices(), &[Point::new(0., 0.), Point::new(2., 0.), Point::new(1., 3.)]);
//! ```

mod exact;

pub mod error;
pub mod generators;
pub mod geom;
pub mod harness;
pub mod hull;
pub mod pointio;
pub mod quickhull;
pub mod ray_shoot;
pub mod reference;
pub mod rs_quickhull;
pub mod stats;

pub use error::{HullError, Result};
pub use generators::{generate, Distribution, EXPONENT_CAP, RNG_NAME};
pub use geom::{above_degenerate, above_line, along, orientation, Frame, Orient, Point};
pub use harness::{read_csv, run_bench, run_bench_with, write_csv, Algorithm, BenchConfig, BenchRecord};
pub use hull::{Hull, HullDefect};
pub use pointio::{parse_points, read_points_file, write_points, write_points_file};
pub use quickhull::{farthest_point, quickhull, quickhull_traced, CallRecord};
pub use ray_shoot::{ray_shoot, tangent_scan, Bridge, Side};
pub use reference::{brute_force_hull_edges, monotone_chain, monotone_chain_counted, BRUTE_FORCE_MAX};
pub use rs_quickhull::{rs_quickhull, rs_quickhull_traced, rs_quickhull_with, RsOptions};
pub use stats::Stats;
