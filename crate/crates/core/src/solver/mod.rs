//! Exact burning numbers with certificates.

mod bounds;
mod partition;
mod search;
mod verify;

pub use bounds::{isometric_path_lower, static_lower_bound, unicyclic_spanning_upper};
pub use partition::{check_partition, extract_partition, RootedTreePartition, TreePart};
pub use verify::{check_sequence, verify_sequence, Violation};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::result::{BurnResult, BurningSequence, Method};

use search::{repair, BallCover, Pass};

/// Search nodes allowed when the caller gives no budget.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Environment variable that overrides [`DEFAULT_NODE_BUDGET`].
pub const NODE_BUDGET_ENV: &str = "BURNKIT_NODE_BUDGET";

/// Largest number of rounds the search handles (radii are tracked in a `u64` mask).
pub const MAX_ROUNDS: usize = 63;

/// The node budget from `BURNKIT_NODE_BUDGET`, if set to a valid integer.
pub fn node_budget_from_env() -> Option<u64> {
    std::env::var(NODE_BUDGET_ENV).ok()?.trim().parse().ok()
}

/// Minimum number of rounds needed to burn `g`, with an optimal burning sequence.
///
/// Iterative deepening starts one below the static lower bound so that the
/// pass at `value - 1` always runs and is recorded in
/// [`BurnResult::refuted_below`]. The certificate is the first sequence found
/// under the search's deterministic order. If `budget` search nodes are spent
/// first the result is [`Error::Inconclusive`] with the bounds known so far.
/// Without an explicit budget, `BURNKIT_NODE_BUDGET` or
/// [`DEFAULT_NODE_BUDGET`] applies.
pub fn burning_number_exact(g: &Graph, budget: Option<u64>) -> Result<BurnResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::param("graph has no vertices"));
    }
    let budget = budget
        .or_else(node_budget_from_env)
        .unwrap_or(DEFAULT_NODE_BUDGET);
    let dm = DistanceMatrix::new(g);
    let lower = static_lower_bound(g, &dm);
    let (upper, greedy_seq) = greedy_upper(&dm, lower)?;

    let mut nodes = 0u64;
    let mut proven_lower = lower;
    let mut refuted_below = false;
    for k in lower.saturating_sub(1).max(1)..=upper {
        let (pass, used) = BallCover::new(&dm, k, nodes, budget).run();
        nodes = used;
        match pass {
            Pass::Refuted => {
                proven_lower = proven_lower.max(k + 1);
                refuted_below = true;
            }
            Pass::OutOfBudget if proven_lower >= upper => {
                // the bounds already meet; the greedy sequence is optimal
                return Ok(BurnResult {
                    value: upper,
                    method: Method::Exact,
                    certificate: Some(greedy_seq),
                    lower_bound: lower,
                    upper_bound: upper,
                    refuted_below: refuted_below || upper == 1,
                    nodes,
                    table_gap: false,
                });
            }
            Pass::OutOfBudget => {
                return Err(Error::Inconclusive {
                    lower: proven_lower,
                    upper,
                    nodes,
                });
            }
            Pass::Found(centers) => {
                let seq = repair(&dm, k, &centers);
                debug_assert_eq!(
                    seq.len(),
                    k,
                    "a shorter sequence contradicts the refuted pass"
                );
                let seq = BurningSequence(seq);
                debug_assert!(verify_sequence(g, &seq).unwrap_or(false));
                return Ok(BurnResult {
                    value: seq.len(),
                    method: Method::Exact,
                    certificate: Some(seq),
                    lower_bound: lower,
                    upper_bound: upper,
                    refuted_below: refuted_below || k == 1,
                    nodes,
                    table_gap: false,
                });
            }
        }
    }
    unreachable!("greedy upper bound {upper} is achievable")
}

/// Smallest `k >= start` at which a single greedy descent covers the graph.
fn greedy_upper(dm: &DistanceMatrix, start: usize) -> Result<(usize, BurningSequence)> {
    for k in start.max(1)..=MAX_ROUNDS {
        if let Some(centers) = BallCover::new(dm, k, 0, u64::MAX).greedy() {
            return Ok((k, BurningSequence(repair(dm, k, &centers))));
        }
    }
    Err(Error::param(format!(
        "graph needs more than {MAX_ROUNDS} rounds; outside the exact solver's range"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn exact(spec: &str) -> BurnResult {
        let g = spec.parse::<FamilySpec>().unwrap().build();
        let r = burning_number_exact(&g, None).unwrap();
        let cert = r.certificate.as_ref().unwrap();
        assert_eq!(cert.len(), r.value);
        assert!(verify_sequence(&g, cert).unwrap(), "{spec}: {cert}");
        assert!(r.refuted_below);
        assert!(r.lower_bound <= r.value && r.value <= r.upper_bound);
        r
    }

    #[test]
    fn small_examples() {
        assert_eq!(exact("cycle:5").value, 3);
        assert_eq!(exact("path:1").value, 1);
        assert_eq!(exact("uni:4;4,4").value, 4);
        assert_eq!(exact("cycle:4").value, 2);
        assert_eq!(exact("forest:2,2").value, 3);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(burning_number_exact(&Graph::empty(0), None).is_err());
    }

    #[test]
    fn edgeless_graphs() {
        for n in 1..=6 {
            assert_eq!(
                burning_number_exact(&Graph::empty(n), None).unwrap().value,
                n
            );
        }
    }

    #[test]
    fn tiny_budget_is_inconclusive_not_wrong() {
        let g = FamilySpec::uni(9, &[10, 2]).unwrap().build();
        match burning_number_exact(&g, Some(1)) {
            Err(Error::Inconclusive { lower, upper, .. }) => {
                assert!(lower <= 5 && 5 <= upper, "[{lower}, {upper}]");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn meeting_bounds_need_no_search() {
        let g = FamilySpec::star(&[8, 1, 1]).unwrap().build();
        let r = burning_number_exact(&g, Some(0)).unwrap();
        assert_eq!((r.value, r.lower_bound, r.upper_bound), (4, 4, 4));
        assert!(!r.refuted_below);
        assert!(verify_sequence(&g, r.certificate.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn repair_respects_spacing() {
        // P_5 with both balls centered on the middle: the radius-0 ball must move
        let g = FamilySpec::Path(5).build();
        let dm = DistanceMatrix::new(&g);
        let seq = repair(&dm, 3, &[Some(2), None, Some(2)]);
        assert_eq!(seq.len(), 3);
        assert!(verify_sequence(&g, &BurningSequence(seq)).unwrap());
    }
}
