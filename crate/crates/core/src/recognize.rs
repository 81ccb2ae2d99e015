//! Structural family recognition and the `n = q^2 + r` parameterization.

use std::fmt;

use serde::Serialize;

use crate::arith::ceil_sqrt;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The structural class of a graph together with its canonical parameters.
///
/// Arm and part lists are always sorted in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyDescriptor {
    Path {
        n: usize,
    },
    Cycle {
        g: usize,
    },
    LinearForest {
        parts: Vec<usize>,
    },
    /// A tree with exactly one vertex of degree at least three.
    GeneralizedStar {
        arms: Vec<usize>,
    },
    /// A cycle of length `g` with `arms.len()` pendant paths hung on one cycle vertex.
    TUnicyclic {
        g: usize,
        arms: Vec<usize>,
    },
    Other,
}

impl FamilyDescriptor {
    pub fn order(&self) -> Option<usize> {
        match self {
            FamilyDescriptor::Path { n } => Some(*n),
            FamilyDescriptor::Cycle { g } => Some(*g),
            FamilyDescriptor::LinearForest { parts } => Some(parts.iter().sum()),
            FamilyDescriptor::GeneralizedStar { arms } => Some(1 + arms.iter().sum::<usize>()),
            FamilyDescriptor::TUnicyclic { g, arms } => Some(g + arms.iter().sum::<usize>()),
            FamilyDescriptor::Other => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyDescriptor::Path { .. } => "path",
            FamilyDescriptor::Cycle { .. } => "cycle",
            FamilyDescriptor::LinearForest { .. } => "linear-forest",
            FamilyDescriptor::GeneralizedStar { .. } => "generalized-star",
            FamilyDescriptor::TUnicyclic { .. } => "t-unicyclic",
            FamilyDescriptor::Other => "other",
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::Path { n } => write!(f, "P_{n}"),
            FamilyDescriptor::Cycle { g } => write!(f, "C_{g}"),
            FamilyDescriptor::LinearForest { parts } => write!(f, "forest[{}]", join(parts)),
            FamilyDescriptor::GeneralizedStar { arms } => write!(f, "star[{}]", join(arms)),
            FamilyDescriptor::TUnicyclic { g, arms } => write!(f, "U_{g}^[{}]", join(arms)),
            FamilyDescriptor::Other => f.write_str("other"),
        }
    }
}

/// Identifies the most specific family `g` belongs to.
///
/// Disconnected graphs are recognized only as linear forests. A bare cycle is
/// reported as [`FamilyDescriptor::Cycle`], never as a unicyclic graph with no arms.
pub fn recognize_family(g: &Graph) -> FamilyDescriptor {
    let n = g.order();
    if n == 0 {
        return FamilyDescriptor::Other;
    }
    let m = g.size();
    let max_deg = g.max_degree();

    if !g.is_connected() {
        if max_deg > 2 {
            return FamilyDescriptor::Other;
        }
        let mut parts = Vec::new();
        for comp in g.components() {
            let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            if edges + 1 != comp.len() {
                return FamilyDescriptor::Other;
            }
            parts.push(comp.len());
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        return FamilyDescriptor::LinearForest { parts };
    }

    if max_deg <= 2 {
        return if m + 1 == n {
            FamilyDescriptor::Path { n }
        } else {
            FamilyDescriptor::Cycle { g: n }
        };
    }

    let mut hubs = (0..n).filter(|&v| g.degree(v) >= 3);
    let hub = hubs.next().expect("max degree >= 3");
    if hubs.next().is_some() {
        return FamilyDescriptor::Other;
    }

    // Every other vertex has degree <= 2, so each walk out of the hub either
    // dies at a leaf (an arm) or comes back around to the hub (the cycle).
    let mut arms = Vec::new();
    let mut cycle_len = None;
    for &first in g.neighbors(hub) {
        let (len, end) = walk(g, hub, first);
        if end == hub {
            cycle_len = Some(len);
        } else {
            arms.push(len);
        }
    }
    arms.sort_unstable_by(|a, b| b.cmp(a));
    match (m + 1 == n, m == n, cycle_len) {
        (true, _, None) => FamilyDescriptor::GeneralizedStar { arms },
        (_, true, Some(g)) => FamilyDescriptor::TUnicyclic { g, arms },
        _ => FamilyDescriptor::Other,
    }
}

/// Follows a degree-2 chain starting with the edge `from -> next`; returns the
/// number of vertices visited and the last vertex reached.
fn walk(g: &Graph, from: Vertex, next: Vertex) -> (usize, Vertex) {
    let (mut prev, mut cur) = (from, next);
    let mut steps = 1;
    while cur != from && g.degree(cur) == 2 {
        let nb = g.neighbors(cur);
        let nxt = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = nxt;
        steps += 1;
    }
    // On returning to the start, `steps` counts the edges of the cycle,
    // which equals its vertex count.
    (steps, cur)
}

/// `n = q^2 + r` with `1 <= r <= 2q + 1`, using `q = ceil(sqrt(n)) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QrDecomposition {
    pub n: u64,
    pub q: u64,
    pub r: u64,
}

pub fn qr_decompose(n: u64) -> Result<QrDecomposition> {
    if n < 2 {
        return Err(Error::param(format!(
            "q/r decomposition needs n >= 2, got {n}"
        )));
    }
    let q = ceil_sqrt(n) - 1;
    Ok(QrDecomposition { n, q, r: n - q * q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn four_cycle_with_two_long_arms() {
        // cycle 0..3, arms 4-5-6-7 and 8-9-10-11 hung on vertex 3
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        e.extend([
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (3, 8),
            (8, 9),
            (9, 10),
            (10, 11),
        ]);
        assert_eq!(
            recognize_family(&g(12, &e)),
            FamilyDescriptor::TUnicyclic {
                g: 4,
                arms: vec![4, 4]
            }
        );
    }

    #[test]
    fn forest_parts_descending() {
        let gr = g(6, &[(0, 1), (2, 3), (3, 4)]);
        assert_eq!(
            recognize_family(&gr),
            FamilyDescriptor::LinearForest {
                parts: vec![3, 2, 1]
            }
        );
    }

    #[test]
    fn claw_is_a_star() {
        assert_eq!(
            recognize_family(&g(4, &[(0, 1), (0, 2), (0, 3)])),
            FamilyDescriptor::GeneralizedStar {
                arms: vec![1, 1, 1]
            }
        );
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(
            recognize_family(&g(1, &[])),
            FamilyDescriptor::Path { n: 1 }
        );
        assert_eq!(
            recognize_family(&g(3, &[(0, 1), (1, 2)])),
            FamilyDescriptor::Path { n: 3 }
        );
        assert_eq!(
            recognize_family(&g(3, &[(0, 1), (1, 2), (2, 0)])),
            FamilyDescriptor::Cycle { g: 3 }
        );
        assert_eq!(
            recognize_family(&g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])),
            FamilyDescriptor::TUnicyclic {
                g: 3,
                arms: vec![1]
            }
        );
        assert_eq!(recognize_family(&g(0, &[])), FamilyDescriptor::Other);
        assert_eq!(
            recognize_family(&g(2, &[])),
            FamilyDescriptor::LinearForest { parts: vec![1, 1] }
        );
    }

    #[test]
    fn others() {
        // K4
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(recognize_family(&k4), FamilyDescriptor::Other);
        // disconnected, one part a cycle
        let gr = g(4, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(recognize_family(&gr), FamilyDescriptor::Other);
        // two hubs
        let gr = g(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        assert_eq!(recognize_family(&gr), FamilyDescriptor::Other);
        // hub off the cycle is impossible for connected graphs; hub with two cycles
        let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(recognize_family(&bowtie), FamilyDescriptor::Other);
    }

    #[test]
    fn qr_examples() {
        assert_eq!(
            qr_decompose(10).unwrap(),
            QrDecomposition { n: 10, q: 3, r: 1 }
        );
        assert_eq!(
            qr_decompose(16).unwrap(),
            QrDecomposition { n: 16, q: 3, r: 7 }
        );
        assert_eq!(
            qr_decompose(12).unwrap(),
            QrDecomposition { n: 12, q: 3, r: 3 }
        );
        assert_eq!(
            qr_decompose(2).unwrap(),
            QrDecomposition { n: 2, q: 1, r: 1 }
        );
        assert!(qr_decompose(1).is_err());
        assert!(qr_decompose(0).is_err());
    }

    #[test]
    fn qr_exhaustive_to_a_million() {
        for n in 2..=1_000_000u64 {
            let QrDecomposition { q, r, .. } = qr_decompose(n).unwrap();
            assert!(q * q < n && n <= q * q + 2 * q + 1, "n={n}");
            assert!(1 <= r && r <= 2 * q + 1);
            assert_eq!(ceil_sqrt(n), q + 1);
        }
    }

    proptest! {
        #[test]
        fn qr_perfect_squares(m in 2u64..100_000) {
            let d = qr_decompose(m * m).unwrap();
            prop_assert_eq!(d.q, m - 1);
            prop_assert_eq!(d.r, 2 * d.q + 1);
        }
    }
}
