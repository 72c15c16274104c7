use std::fmt;
use std::ops::AddAssign;

/// Operation counters for one algorithm run.
///
/// `orientation_tests` is the machine-independent cost measure: every exact
/// sign evaluation made by a hull algorithm increments it by one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub orientation_tests: u64,
    pub ray_shoot_calls: u64,
    pub recursive_calls: u64,
    pub points_pruned: u64,
    pub max_depth: u64,
}

impl Stats {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn observe_depth(&mut self, depth: u64) {
        self.max_depth = self.max_depth.max(depth);
    }

    /// Combine per-branch or per-trial counters. Depth merges as a maximum.
    pub fn merge(&mut self, other: &Stats) {
        self.orientation_tests += other.orientation_tests;
        self.ray_shoot_calls += other.ray_shoot_calls;
        self.recursive_calls += other.recursive_calls;
        self.points_pruned += other.points_pruned;
        self.max_depth = self.max_depth.max(other.max_depth);
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn entries(&self) -> [(&'static str, u64); 5] {
        [
            ("orientation_tests", self.orientation_tests),
            ("ray_shoot_calls", self.ray_shoot_calls),
            ("recursive_calls", self.recursive_calls),
            ("points_pruned", self.points_pruned),
            ("max_depth", self.max_depth),
        ]
    }
}

impl AddAssign<&Stats> for Stats {
    fn add_assign(&mut self, rhs: &Stats) {
        self.merge(rhs);
    }
}

impl fmt::Display for Stats {
    /// One `key=value` pair per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.entries().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
