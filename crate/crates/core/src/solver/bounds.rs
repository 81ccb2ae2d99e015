use crate::arith::ceil_sqrt;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::recognize::FamilyDescriptor;

use super::burning_number_exact;

/// A lower bound valid for every graph: the larger of the component count,
/// the burning number of a diametral (isometric) path, and the fewest rounds
/// whose largest balls could hold all vertices.
pub fn static_lower_bound(g: &Graph, dm: &DistanceMatrix) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let components = g.components().len();
    let diametral = ceil_sqrt(dm.diameter() as u64 + 1) as usize;

    let mut capacity = 0;
    let mut rounds = 0;
    while capacity < n {
        let largest = (0..n)
            .map(|x| dm.row(x).iter().filter(|&&d| d <= rounds as u32).count())
            .max()
            .unwrap_or(1);
        capacity += largest;
        rounds += 1;
    }
    components.max(diametral).max(rounds)
}

/// Minimum over the cycle edges `e` of the exact burning number of the
/// spanning tree `G - e`. For a unicyclic graph this equals `b(G)`, which
/// makes it a second oracle independent of the search on `G` itself.
pub fn unicyclic_spanning_upper(g: &Graph, budget: Option<u64>) -> Result<usize> {
    if g.order() < 3 || g.size() != g.order() || !g.is_connected() {
        return Err(Error::WrongFamily("unicyclic"));
    }
    // peel leaves; what remains is the cycle
    let mut deg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut stack: Vec<_> = (0..g.order()).filter(|&v| deg[v] == 1).collect();
    let mut on_cycle = vec![true; g.order()];
    while let Some(v) = stack.pop() {
        on_cycle[v] = false;
        for &w in g.neighbors(v) {
            if on_cycle[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let mut best = usize::MAX;
    for (u, v) in g.edges().filter(|&(u, v)| on_cycle[u] && on_cycle[v]) {
        let tree = g.without_edge(u, v).expect("edge exists");
        best = best.min(burning_number_exact(&tree, budget)?.value);
    }
    Ok(best)
}

/// `ceil(sqrt(L))` for the longest of two isometric paths in a t-unicyclic
/// graph: arm `a1` plus half the cycle (`a1 + floor(g/2) + 1` vertices), and
/// for `t >= 2` the two longest arms joined at the hub (`a1 + a2 + 1`).
pub fn isometric_path_lower(desc: &FamilyDescriptor) -> Result<usize> {
    match desc {
        FamilyDescriptor::TUnicyclic { g, arms } if !arms.is_empty() => {
            let through_cycle = arms[0] + g / 2 + 1;
            let through_hub = if arms.len() >= 2 {
                arms[0] + arms[1] + 1
            } else {
                0
            };
            Ok(ceil_sqrt(through_cycle.max(through_hub) as u64) as usize)
        }
        FamilyDescriptor::Cycle { .. } => Err(Error::param(
            "isometric path bound needs t >= 1; use the cycle formula",
        )),
        _ => Err(Error::WrongFamily("t-unicyclic")),
    }
}
