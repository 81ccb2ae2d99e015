//! Benchmark inputs shared by the targets under `benches/`.

use burnkit::{FamilySpec, Graph};

/// Instances that exercise the exact solver at increasing difficulty.
pub const SOLVER_CASES: &[&str] = &[
    "cycle:30",
    "forest:11,11,2",
    "uni:9;10,2",
    "uni:11;13,9",
    "uni:37;4,1",
    "star:12,10,9,8",
];

pub fn build(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().expect("valid spec").build()
}
